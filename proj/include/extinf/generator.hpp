#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extinf/graph.hpp"

namespace extinf {

enum class GraphKind {
    linear_chain,
    sparse_tree,
    dense,
    star,
    disconnected,
    cycle,
    equal_weights,
    grid,
    worst_case_tie,
    real_world_like,
};

inline constexpr std::array<GraphKind, 10> kAllGraphKinds{
    GraphKind::linear_chain, GraphKind::sparse_tree,   GraphKind::dense,
    GraphKind::star,         GraphKind::disconnected,  GraphKind::cycle,
    GraphKind::equal_weights, GraphKind::grid,         GraphKind::worst_case_tie,
    GraphKind::real_world_like,
};

[[nodiscard]] std::string_view to_string(GraphKind kind) noexcept;
[[nodiscard]] std::optional<GraphKind> parse_graph_kind(std::string_view name) noexcept;

/// Smallest node count the kind can be built with (grid additionally needs a
/// perfect square).
[[nodiscard]] std::size_t min_node_count(GraphKind kind) noexcept;

struct WeightRange {
    std::int64_t low = 1;
    std::int64_t high = 10;
};

struct GeneratorSpec {
    GraphKind kind = GraphKind::linear_chain;
    std::size_t node_count = 4;
    WeightRange weights;
    std::uint64_t seed = 0;
    /// When set, edge weights are taken from this list in generation order
    /// (wrapping around) instead of being drawn from `weights`.
    std::vector<double> fixed_weights;
};

class GeneratorSpecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Throws GeneratorSpecError describing the first problem found.
void check_spec(const GeneratorSpec& spec);

/// Deterministic in `spec`: the RNG is std::mt19937_64 seeded with
/// `spec.seed`, and bounded draws use rejection sampling, so output does not
/// depend on the standard library's distribution implementations.
///
/// Node ids are zero-padded decimal indices ("0".."9", "00".."99", ...), so
/// lexicographic and numeric order coincide. Node "0" is always the natural
/// source:
///   linear_chain     0 -> 1 -> ... -> n-1
///   sparse_tree      random recursive tree rooted at 0, edges point away from the root
///   dense            complete digraph with symmetric weights
///   star             0 -> every other node, leaves have no out-edges
///   disconnected     2..min(n,4) chains on disjoint node blocks
///   cycle            0 -> 1 -> ... -> n-1 -> 0
///   equal_weights    chain backbone plus random forward shortcuts, one shared weight
///   grid             sqrt(n) x sqrt(n) 4-neighbour lattice, row-major ids, symmetric weights
///   worst_case_tie   optional lead-in node, then two disjoint equal-cost branches into sink n-1
///   real_world_like  forward-only road-like DAG; every node reachable from 0 and reaching n-1
[[nodiscard]] Graph generate(const GeneratorSpec& spec);

/// Id of the i-th node of an n-node generated graph.
[[nodiscard]] NodeId generated_node_id(std::size_t index, std::size_t node_count);

}  // namespace extinf
