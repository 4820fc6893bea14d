#pragma once

#include <concepts>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extinf/extended_weight.hpp"
#include "extinf/graph.hpp"

namespace extinf {

using DistanceMap = std::map<NodeId, ExtendedWeight, std::less<>>;

enum class DomainId { ieee_baseline, sentinel };

[[nodiscard]] std::string_view to_string(DomainId domain) noexcept;
[[nodiscard]] std::optional<DomainId> parse_domain(std::string_view name) noexcept;

class UnknownNodeError : public std::invalid_argument {
  public:
    explicit UnknownNodeError(std::string_view node)
        : std::invalid_argument("unknown source node '" + std::string(node) + "'"), node_(node) {}
    [[nodiscard]] const std::string& node() const noexcept { return node_; }

  private:
    std::string node_;
};

/// The operations Dijkstra needs from a distance type. The two domains below
/// differ only in how "not reached yet" is represented.
template <class D>
concept WeightDomain = requires(typename D::value_type a, typename D::value_type b, double w) {
    { D::infinity() } -> std::same_as<typename D::value_type>;
    { D::zero() } -> std::same_as<typename D::value_type>;
    { D::lift(w) } -> std::same_as<typename D::value_type>;
    { D::add(a, b) } -> std::same_as<typename D::value_type>;
    { D::less(a, b) } -> std::same_as<bool>;
    { D::to_extended(a) } -> std::same_as<ExtendedWeight>;
};

/// Plain binary64 with IEEE +inf for unreached nodes.
struct Binary64Domain {
    using value_type = double;
    static constexpr DomainId id = DomainId::ieee_baseline;

    static constexpr double infinity() noexcept { return std::numeric_limits<double>::infinity(); }
    static constexpr double zero() noexcept { return 0.0; }
    static constexpr double lift(double w) noexcept { return w; }
    static constexpr double add(double a, double b) noexcept { return a + b; }
    static constexpr bool less(double a, double b) noexcept { return a < b; }
    static ExtendedWeight to_extended(double a) { return from_binary64(a); }
};

/// Tagged sentinel infinity.
struct SentinelDomain {
    using value_type = ExtendedWeight;
    static constexpr DomainId id = DomainId::sentinel;

    static constexpr ExtendedWeight infinity() noexcept { return ExtendedWeight::infinity(); }
    static constexpr ExtendedWeight zero() noexcept { return ExtendedWeight{}; }
    // Edge weights come from a validated IndexedGraph.
    static constexpr ExtendedWeight lift(double w) noexcept { return ExtendedWeight::unchecked_finite(w); }
    static constexpr ExtendedWeight add(ExtendedWeight a, ExtendedWeight b) noexcept { return a + b; }
    static constexpr bool less(ExtendedWeight a, ExtendedWeight b) noexcept { return a < b; }
    static constexpr ExtendedWeight to_extended(ExtendedWeight a) noexcept { return a; }
};

static_assert(WeightDomain<Binary64Domain>);
static_assert(WeightDomain<SentinelDomain>);

/// Single-source shortest-path costs indexed like `g`.
///
/// Selection is a linear scan of the unvisited list (kept in index order, so
/// ties go to the lexicographically smallest id); relaxation replaces a
/// distance only when the candidate is strictly smaller.
template <WeightDomain D>
[[nodiscard]] std::vector<typename D::value_type> shortest_distances(const IndexedGraph& g, NodeIndex source) {
    using Value = typename D::value_type;
    if (source >= g.node_count()) {
        throw std::out_of_range("source index out of range");
    }

    std::vector<Value> dist(g.node_count(), D::infinity());
    dist[source] = D::zero();
    std::vector<NodeIndex> unvisited(g.node_count());
    std::iota(unvisited.begin(), unvisited.end(), NodeIndex{0});

    while (!unvisited.empty()) {
        auto best = unvisited.begin();
        for (auto it = std::next(best); it != unvisited.end(); ++it) {
            if (D::less(dist[*it], dist[*best])) {
                best = it;
            }
        }
        const NodeIndex current = *best;
        for (const auto& arc : g.arcs(current)) {
            const Value candidate = D::add(dist[current], D::lift(arc.weight));
            if (D::less(candidate, dist[arc.target])) {
                dist[arc.target] = candidate;
            }
        }
        unvisited.erase(best);
    }
    return dist;
}

template <WeightDomain D>
[[nodiscard]] DistanceMap to_distance_map(const IndexedGraph& g, const std::vector<typename D::value_type>& dist) {
    DistanceMap out;
    for (NodeIndex i = 0; i < dist.size(); ++i) {
        out.emplace_hint(out.end(), g.name(i), D::to_extended(dist[i]));
    }
    return out;
}

[[nodiscard]] DistanceMap dijkstra(const IndexedGraph& g, std::string_view source, DomainId domain);

/// Throws InvalidGraphError for graphs failing validate() and
/// UnknownNodeError when `source` is not a node.
[[nodiscard]] DistanceMap dijkstra(const Graph& g, std::string_view source, DomainId domain);

/// Reference oracle: |V|-1 rounds of relaxing every edge. Same contract as dijkstra().
[[nodiscard]] DistanceMap bellman_ford(const Graph& g, std::string_view source);

/// JSON object: node id -> number, or the string "inf" for unreachable nodes.
[[nodiscard]] std::string distances_to_json(const DistanceMap& distances);

}  // namespace extinf
