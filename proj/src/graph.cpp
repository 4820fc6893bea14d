#include "extinf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

namespace extinf {

using json = nlohmann::json;

std::size_t Graph::edge_count() const noexcept {
    return std::accumulate(adjacency_.begin(), adjacency_.end(), std::size_t{0},
                           [](std::size_t acc, const auto& entry) { return acc + entry.second.size(); });
}

const Neighbors& Graph::neighbors(std::string_view node) const {
    const auto it = adjacency_.find(node);
    if (it == adjacency_.end()) {
        throw std::out_of_range("unknown node '" + std::string(node) + "'");
    }
    return it->second;
}

std::optional<NodeId> Graph::first_node() const {
    if (adjacency_.empty()) {
        return std::nullopt;
    }
    return adjacency_.begin()->first;
}

std::string Violation::describe() const {
    switch (kind) {
        case ViolationKind::missing_node:
            return "edge " + node + " -> " + neighbor + " targets a node that is not in the graph";
        case ViolationKind::negative_weight:
            return "edge " + node + " -> " + neighbor + " has a negative weight";
        case ViolationKind::non_finite_weight:
            return "edge " + node + " -> " + neighbor + " has a non-finite weight";
    }
    return "unknown violation";
}

std::vector<Violation> validate(const Graph& g) {
    std::vector<Violation> out;
    for (const auto& [node, neighbors] : g.adjacency()) {
        for (const auto& [neighbor, weight] : neighbors) {
            if (!g.contains(neighbor)) {
                out.push_back({ViolationKind::missing_node, node, neighbor});
            }
            if (!std::isfinite(weight)) {
                out.push_back({ViolationKind::non_finite_weight, node, neighbor});
            } else if (weight < 0.0) {
                out.push_back({ViolationKind::negative_weight, node, neighbor});
            }
        }
    }
    return out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
    std::string msg = "invalid graph";
    for (const auto& v : violations) {
        msg += "; " + v.describe();
    }
    return msg;
}

// Streams the document straight into an Adjacency so that every error can
// name the node or edge it happened at.
class GraphSax {
  public:
    using number_integer_t = json::number_integer_t;
    using number_unsigned_t = json::number_unsigned_t;
    using number_float_t = json::number_float_t;
    using string_t = json::string_t;
    using binary_t = json::binary_t;

    Adjacency adjacency;

    bool null() { return non_numeric("null"); }
    bool boolean(bool) { return non_numeric("a boolean"); }
    bool string(string_t&) { return non_numeric("a string"); }
    bool binary(binary_t&) { return non_numeric("binary data"); }

    bool number_integer(number_integer_t v) { return weight(static_cast<double>(v)); }
    bool number_unsigned(number_unsigned_t v) { return weight(static_cast<double>(v)); }
    bool number_float(number_float_t v, const string_t&) { return weight(v); }

    bool start_object(std::size_t) {
        if (depth_ == 0) {
            ++depth_;
            return true;
        }
        if (depth_ == 1) {
            ++depth_;
            return true;
        }
        return non_numeric("an object");
    }

    bool end_object() {
        --depth_;
        return true;
    }

    bool start_array(std::size_t) {
        if (depth_ == 2) {
            return non_numeric("an array");
        }
        return non_object("an array");
    }

    bool end_array() { return true; }

    bool key(string_t& k) {
        if (depth_ == 1) {
            if (adjacency.contains(k)) {
                throw GraphParseError(ParseErrorKind::duplicate_key, "duplicate node '" + k + "'");
            }
            node_ = k;
            adjacency.emplace(k, Neighbors{});
        } else {
            if (adjacency.at(node_).contains(k)) {
                throw GraphParseError(ParseErrorKind::duplicate_key,
                                      "duplicate edge " + node_ + " -> " + k);
            }
            neighbor_ = k;
        }
        return true;
    }

    bool parse_error(std::size_t position, const std::string& last_token, const json::exception& ex) {
        // 406: number literal out of binary64 range.
        if (ex.id == 406 && depth_ == 2) {
            throw GraphParseError(ParseErrorKind::non_finite_weight,
                                  "edge " + node_ + " -> " + neighbor_ + ": weight " + last_token +
                                      " is not finite");
        }
        throw GraphParseError(ParseErrorKind::malformed_json, "malformed JSON at byte " +
                                                                  std::to_string(position) + ": " + ex.what());
    }

  private:
    bool weight(double w) {
        if (depth_ != 2) {
            return non_object("a number");
        }
        if (!std::isfinite(w)) {
            throw GraphParseError(ParseErrorKind::non_finite_weight,
                                  "edge " + node_ + " -> " + neighbor_ + " has a non-finite weight");
        }
        if (w < 0.0) {
            throw GraphParseError(ParseErrorKind::negative_weight, "edge " + node_ + " -> " + neighbor_ +
                                                                       " has negative weight " +
                                                                       std::to_string(w));
        }
        adjacency.at(node_).emplace(neighbor_, w + 0.0);
        return true;
    }

    bool non_numeric(const char* what) {
        if (depth_ != 2) {
            return non_object(what);
        }
        throw GraphParseError(ParseErrorKind::non_numeric_weight,
                              "edge " + node_ + " -> " + neighbor_ + ": weight is " + what + ", expected a number");
    }

    bool non_object(const char* what) {
        if (depth_ == 0) {
            throw GraphParseError(ParseErrorKind::non_object_topology,
                                  std::string("graph document is ") + what + ", expected an object");
        }
        throw GraphParseError(ParseErrorKind::non_object_topology,
                              "node '" + node_ + "' maps to " + what + ", expected an object of neighbors");
    }

    int depth_ = 0;
    std::string node_;
    std::string neighbor_;
};

}  // namespace

InvalidGraphError::InvalidGraphError(std::vector<Violation> violations)
    : std::invalid_argument(summarize(violations)), violations_(std::move(violations)) {}

ParsedGraph parse_graph(std::string_view text) {
    GraphSax sax;
    json::sax_parse(text.begin(), text.end(), &sax);

    ParsedGraph out;
    std::set<std::string> missing;
    for (const auto& [node, neighbors] : sax.adjacency) {
        for (const auto& [neighbor, weight] : neighbors) {
            if (!sax.adjacency.contains(neighbor)) {
                missing.insert(neighbor);
            }
        }
    }
    for (const auto& node : missing) {
        sax.adjacency.emplace(node, Neighbors{});
        out.warnings.push_back("node '" + node + "' appears only as an edge target; added with no outgoing edges");
    }
    out.graph = Graph(std::move(sax.adjacency));
    return out;
}

std::string emit_graph(const Graph& g) {
    constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53
    json doc = json::object();
    for (const auto& [node, neighbors] : g.adjacency()) {
        json edges = json::object();
        for (const auto& [neighbor, weight] : neighbors) {
            if (std::isfinite(weight) && weight >= 0.0 && weight < kExactIntegerLimit && std::trunc(weight) == weight) {
                edges[neighbor] = static_cast<std::uint64_t>(weight);
            } else {
                edges[neighbor] = weight;
            }
        }
        doc[node] = std::move(edges);
    }
    return doc.dump();
}

IndexedGraph::IndexedGraph(const Graph& g) {
    if (auto violations = validate(g); !violations.empty()) {
        throw InvalidGraphError(std::move(violations));
    }
    names_.reserve(g.node_count());
    for (const auto& entry : g.adjacency()) {
        names_.push_back(entry.first);
    }
    offsets_.reserve(names_.size() + 1);
    offsets_.push_back(0);
    arcs_.reserve(g.edge_count());
    for (const auto& entry : g.adjacency()) {
        for (const auto& [neighbor, weight] : entry.second) {
            arcs_.push_back({*index_of(neighbor), weight});
        }
        offsets_.push_back(arcs_.size());
    }
}

std::optional<NodeIndex> IndexedGraph::index_of(std::string_view node) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), node,
                                     [](const NodeId& a, std::string_view b) { return a < b; });
    if (it == names_.end() || *it != node) {
        return std::nullopt;
    }
    return static_cast<NodeIndex>(it - names_.begin());
}

}  // namespace extinf
