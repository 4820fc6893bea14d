#include "extinf/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace extinf {

namespace {

constexpr std::array<std::string_view, 10> kKindNames{
    "linear_chain", "sparse_tree",   "dense", "star",           "disconnected",
    "cycle",        "equal_weights", "grid",  "worst_case_tie", "real_world_like",
};

constexpr std::int64_t kMaxWeight = std::int64_t{1} << 31;
constexpr std::size_t kMaxNodes = 1'000'000;

std::size_t integer_sqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

class Builder {
  public:
    explicit Builder(const GeneratorSpec& spec) : spec_(spec), rng_(spec.seed) {
        for (std::size_t i = 0; i < spec.node_count; ++i) {
            ids_.push_back(generated_node_id(i, spec.node_count));
            adjacency_.emplace(ids_.back(), Neighbors{});
        }
        if (spec.kind == GraphKind::equal_weights) {
            shared_weight_ = spec.fixed_weights.empty() ? static_cast<double>(draw_in(spec.weights.low, spec.weights.high))
                                                        : spec.fixed_weights.front();
        }
    }

    // Uniform integer in [0, bound) by rejection, independent of the
    // library's distribution classes.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        std::uint64_t x = 0;
        do {
            x = rng_();
        } while (x >= limit);
        return x % bound;
    }

    std::int64_t draw_in(std::int64_t low, std::int64_t high) {
        return low + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(high - low) + 1));
    }

    double next_weight() {
        if (shared_weight_) {
            return *shared_weight_;
        }
        if (!spec_.fixed_weights.empty()) {
            return spec_.fixed_weights[fixed_cursor_++ % spec_.fixed_weights.size()];
        }
        return static_cast<double>(draw_in(spec_.weights.low, spec_.weights.high));
    }

    void edge(std::size_t from, std::size_t to, double weight) { adjacency_.at(ids_[from])[ids_[to]] = weight; }
    void edge(std::size_t from, std::size_t to) { edge(from, to, next_weight()); }

    void both_ways(std::size_t a, std::size_t b) {
        const double w = next_weight();
        edge(a, b, w);
        edge(b, a, w);
    }

    [[nodiscard]] bool has_out_edges(std::size_t node) const { return !adjacency_.at(ids_[node]).empty(); }

    Graph finish() && { return Graph(std::move(adjacency_)); }

  private:
    const GeneratorSpec& spec_;
    std::mt19937_64 rng_;
    std::vector<NodeId> ids_;
    Adjacency adjacency_;
    std::optional<double> shared_weight_;
    std::size_t fixed_cursor_ = 0;
};

void chain(Builder& b, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
        b.edge(i, i + 1);
    }
}

}  // namespace

std::string_view to_string(GraphKind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<GraphKind> parse_graph_kind(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) {
            return static_cast<GraphKind>(i);
        }
    }
    return std::nullopt;
}

std::size_t min_node_count(GraphKind kind) noexcept {
    switch (kind) {
        case GraphKind::cycle:
            return 3;
        case GraphKind::grid:
        case GraphKind::worst_case_tie:
        case GraphKind::real_world_like:
            return 4;
        default:
            return 2;
    }
}

NodeId generated_node_id(std::size_t index, std::size_t node_count) {
    const std::size_t width = node_count <= 1 ? 1 : std::to_string(node_count - 1).size();
    std::string digits = std::to_string(index);
    return std::string(width - std::min(width, digits.size()), '0') + digits;
}

void check_spec(const GeneratorSpec& spec) {
    const std::string kind(to_string(spec.kind));
    if (spec.node_count < min_node_count(spec.kind)) {
        throw GeneratorSpecError(kind + " needs at least " + std::to_string(min_node_count(spec.kind)) +
                                 " nodes, got " + std::to_string(spec.node_count));
    }
    if (spec.node_count > kMaxNodes) {
        throw GeneratorSpecError("node count " + std::to_string(spec.node_count) + " exceeds " +
                                 std::to_string(kMaxNodes));
    }
    if (spec.kind == GraphKind::grid) {
        const std::size_t side = integer_sqrt(spec.node_count);
        if (side * side != spec.node_count) {
            throw GeneratorSpecError("grid node count must be a perfect square, got " +
                                     std::to_string(spec.node_count));
        }
    }
    if (!spec.fixed_weights.empty()) {
        for (double w : spec.fixed_weights) {
            if (!std::isfinite(w) || w < 0.0) {
                throw GeneratorSpecError("fixed weights must be finite and non-negative");
            }
        }
        if (spec.kind == GraphKind::equal_weights &&
            std::adjacent_find(spec.fixed_weights.begin(), spec.fixed_weights.end(), std::not_equal_to<>()) !=
                spec.fixed_weights.end()) {
            throw GeneratorSpecError("equal_weights takes a single fixed weight");
        }
        return;
    }
    const std::int64_t floor = spec.kind == GraphKind::equal_weights ? 0 : 1;
    if (spec.weights.low < floor) {
        throw GeneratorSpecError("weight range must start at " + std::to_string(floor) + " or above for " + kind);
    }
    if (spec.weights.low > spec.weights.high) {
        throw GeneratorSpecError("weight range is empty");
    }
    if (spec.weights.high > kMaxWeight) {
        throw GeneratorSpecError("weights above 2^31 are not supported");
    }
}

Graph generate(const GeneratorSpec& spec) {
    check_spec(spec);
    Builder b(spec);
    const std::size_t n = spec.node_count;

    switch (spec.kind) {
        case GraphKind::linear_chain:
            chain(b, 0, n - 1);
            break;

        case GraphKind::sparse_tree:
            for (std::size_t i = 1; i < n; ++i) {
                b.edge(b.below(i), i);
            }
            break;

        case GraphKind::dense:
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    b.both_ways(i, j);
                }
            }
            break;

        case GraphKind::star:
            for (std::size_t i = 1; i < n; ++i) {
                b.edge(0, i);
            }
            break;

        case GraphKind::disconnected: {
            const std::size_t components = 2 + b.below(std::min<std::size_t>(n, 4) - 1);
            std::set<std::size_t> cuts;
            while (cuts.size() < components - 1) {
                cuts.insert(1 + b.below(n - 1));
            }
            std::size_t start = 0;
            for (std::size_t cut : cuts) {
                chain(b, start, cut - 1);
                start = cut;
            }
            chain(b, start, n - 1);
            break;
        }

        case GraphKind::cycle:
            chain(b, 0, n - 1);
            b.edge(n - 1, 0);
            break;

        case GraphKind::equal_weights:
            chain(b, 0, n - 1);
            for (std::size_t i = 0; i + 2 < n; ++i) {
                if (b.below(3) == 0) {
                    b.edge(i, i + 2 + b.below(n - i - 2));
                }
            }
            break;

        case GraphKind::grid: {
            const std::size_t side = integer_sqrt(n);
            for (std::size_t r = 0; r < side; ++r) {
                for (std::size_t c = 0; c < side; ++c) {
                    const std::size_t here = r * side + c;
                    if (c + 1 < side) {
                        b.both_ways(here, here + 1);
                    }
                    if (r + 1 < side) {
                        b.both_ways(here, here + side);
                    }
                }
            }
            break;
        }

        case GraphKind::worst_case_tie: {
            // start [-> split] then two branches of `len` interior nodes into the sink.
            const std::size_t interior = n - 2;
            const std::size_t lead_in = interior % 2;
            const std::size_t len = (interior - lead_in) / 2;
            const std::size_t split = lead_in;
            if (lead_in) {
                b.edge(0, split);
            }
            std::vector<double> weights(len + 1);
            for (double& w : weights) {
                w = b.next_weight();
            }
            const std::size_t sink = n - 1;
            const std::size_t first_a = split + 1;
            const std::size_t first_b = first_a + len;
            for (std::size_t k = 0; k <= len; ++k) {
                const std::size_t from_a = k == 0 ? split : first_a + k - 1;
                const std::size_t to_a = k == len ? sink : first_a + k;
                const std::size_t from_b = k == 0 ? split : first_b + k - 1;
                const std::size_t to_b = k == len ? sink : first_b + k;
                b.edge(from_a, to_a, weights[k]);
                b.edge(from_b, to_b, weights[len - k]);
            }
            break;
        }

        case GraphKind::real_world_like:
            for (std::size_t i = 1; i < n; ++i) {
                const std::size_t window = std::min<std::size_t>(i, 3);
                const std::size_t primary = i - 1 - b.below(window);
                b.edge(primary, i);
                if (i >= 2 && b.below(2) == 0) {
                    const std::size_t wide = std::min<std::size_t>(i, 4);
                    const std::size_t secondary = i - 1 - b.below(wide);
                    if (secondary != primary) {
                        b.edge(secondary, i);
                    }
                }
            }
            for (std::size_t i = 0; i + 1 < n; ++i) {
                if (!b.has_out_edges(i)) {
                    const std::size_t reach = std::min<std::size_t>(n - 1 - i, 3);
                    b.edge(i, i + 1 + b.below(reach));
                }
            }
            break;
    }
    return std::move(b).finish();
}

}  // namespace extinf
