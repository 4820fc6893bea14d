#include "extinf/shortest_path.hpp"

#include <cmath>

#include <json.hpp>

namespace extinf {

std::string_view to_string(DomainId domain) noexcept {
    switch (domain) {
        case DomainId::ieee_baseline:
            return "ieee_baseline";
        case DomainId::sentinel:
            return "sentinel";
    }
    return "unknown";
}

std::optional<DomainId> parse_domain(std::string_view name) noexcept {
    if (name == "ieee_baseline" || name == "ieee" || name == "baseline") {
        return DomainId::ieee_baseline;
    }
    if (name == "sentinel") {
        return DomainId::sentinel;
    }
    return std::nullopt;
}

DistanceMap dijkstra(const IndexedGraph& g, std::string_view source, DomainId domain) {
    const auto start = g.index_of(source);
    if (!start) {
        throw UnknownNodeError(source);
    }
    switch (domain) {
        case DomainId::ieee_baseline:
            return to_distance_map<Binary64Domain>(g, shortest_distances<Binary64Domain>(g, *start));
        case DomainId::sentinel:
            return to_distance_map<SentinelDomain>(g, shortest_distances<SentinelDomain>(g, *start));
    }
    throw std::invalid_argument("unknown weight domain");
}

DistanceMap dijkstra(const Graph& g, std::string_view source, DomainId domain) {
    return dijkstra(IndexedGraph(g), source, domain);
}

DistanceMap bellman_ford(const Graph& g, std::string_view source) {
    if (auto violations = validate(g); !violations.empty()) {
        throw InvalidGraphError(std::move(violations));
    }
    if (!g.contains(source)) {
        throw UnknownNodeError(source);
    }

    // nullopt marks "no path found yet"; kept separate from either Dijkstra domain.
    std::map<NodeId, std::optional<double>, std::less<>> best;
    for (const auto& entry : g.adjacency()) {
        best.emplace(entry.first, std::nullopt);
    }
    best.find(source)->second = 0.0;

    for (std::size_t round = 1; round < g.node_count(); ++round) {
        bool changed = false;
        for (const auto& [node, neighbors] : g.adjacency()) {
            const auto from = best.find(node)->second;
            if (!from) {
                continue;
            }
            for (const auto& [neighbor, weight] : neighbors) {
                auto& to = best.find(neighbor)->second;
                const double candidate = *from + weight;
                if (!to || candidate < *to) {
                    to = candidate;
                    changed = true;
                }
            }
        }
        if (!changed) {
            break;
        }
    }

    DistanceMap out;
    for (const auto& [node, value] : best) {
        out.emplace_hint(out.end(), node, value ? from_binary64(*value) : ExtendedWeight::infinity());
    }
    return out;
}

std::string distances_to_json(const DistanceMap& distances) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [node, d] : distances) {
        if (d.is_infinite()) {
            doc[node] = "inf";
        } else if (const double v = *d.value(); std::trunc(v) == v && v < 9007199254740992.0) {
            doc[node] = static_cast<std::uint64_t>(v);
        } else {
            doc[node] = v;
        }
    }
    return doc.dump();
}

}  // namespace extinf
