#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extinf {

using NodeId = std::string;
using Neighbors = std::map<NodeId, double, std::less<>>;
using Adjacency = std::map<NodeId, Neighbors, std::less<>>;

/// Directed weighted graph keyed by node id.
///
/// A Graph is a plain value: it may hold dangling targets or bad weights so
/// that validate() can report them. Algorithms require a graph that passes
/// validation and reject anything else.
class Graph {
  public:
    Graph() = default;
    explicit Graph(Adjacency adjacency) : adjacency_(std::move(adjacency)) {}

    [[nodiscard]] const Adjacency& adjacency() const noexcept { return adjacency_; }
    [[nodiscard]] std::size_t node_count() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept;
    [[nodiscard]] bool contains(std::string_view node) const { return adjacency_.find(node) != adjacency_.end(); }
    [[nodiscard]] bool empty() const noexcept { return adjacency_.empty(); }

    /// Outgoing edges of `node`. Throws std::out_of_range for unknown nodes.
    [[nodiscard]] const Neighbors& neighbors(std::string_view node) const;

    /// Lexicographically smallest node id, or nullopt for the empty graph.
    [[nodiscard]] std::optional<NodeId> first_node() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    Adjacency adjacency_;
};

enum class ViolationKind { missing_node, negative_weight, non_finite_weight };

struct Violation {
    ViolationKind kind;
    NodeId node;
    NodeId neighbor;

    [[nodiscard]] std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// One entry per broken invariant; empty iff every edge target is a node and
/// every weight is finite and non-negative.
[[nodiscard]] std::vector<Violation> validate(const Graph& g);

/// Thrown by algorithms handed a graph that does not pass validate().
class InvalidGraphError : public std::invalid_argument {
  public:
    explicit InvalidGraphError(std::vector<Violation> violations);
    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

enum class ParseErrorKind {
    malformed_json,
    non_object_topology,
    duplicate_key,
    non_numeric_weight,
    negative_weight,
    non_finite_weight,
};

class GraphParseError : public std::runtime_error {
  public:
    GraphParseError(ParseErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }

  private:
    ParseErrorKind kind_;
};

struct ParsedGraph {
    Graph graph;
    /// Edge targets that were not keys of the document and were added with no
    /// outgoing edges.
    std::vector<std::string> warnings;
};

/// Reads the adjacency JSON format: {"node": {"neighbor": weight, ...}, ...}.
[[nodiscard]] ParsedGraph parse_graph(std::string_view text);

/// Canonical form: keys sorted, no whitespace, integral weights without a
/// fractional part, other weights in shortest round-trip form.
[[nodiscard]] std::string emit_graph(const Graph& g);

using NodeIndex = std::uint32_t;

/// Compressed-row form of a validated graph. Nodes are indexed in
/// lexicographic id order, so index order is also the tie-break order.
class IndexedGraph {
  public:
    struct Arc {
        NodeIndex target;
        double weight;
    };

    /// Throws InvalidGraphError if `g` does not pass validate().
    explicit IndexedGraph(const Graph& g);

    [[nodiscard]] std::size_t node_count() const noexcept { return names_.size(); }
    [[nodiscard]] std::span<const Arc> arcs(NodeIndex node) const noexcept {
        return {arcs_.data() + offsets_[node], arcs_.data() + offsets_[node + 1]};
    }
    [[nodiscard]] const NodeId& name(NodeIndex node) const noexcept { return names_[node]; }
    [[nodiscard]] const std::vector<NodeId>& names() const noexcept { return names_; }
    [[nodiscard]] std::optional<NodeIndex> index_of(std::string_view node) const;

  private:
    std::vector<NodeId> names_;
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
};

}  // namespace extinf
