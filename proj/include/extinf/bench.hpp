#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extinf/graph.hpp"
#include "extinf/shortest_path.hpp"
#include "extinf/stats.hpp"

namespace extinf {

/// A graph prepared for timing: validated, indexed, and with its source resolved.
class BenchCase {
  public:
    /// Without a source the lexicographically smallest node is used.
    /// Throws InvalidGraphError, UnknownNodeError, or std::invalid_argument
    /// for an empty graph.
    BenchCase(std::string graph_id, const Graph& graph, std::optional<NodeId> source = std::nullopt);

    [[nodiscard]] const std::string& graph_id() const noexcept { return graph_id_; }
    [[nodiscard]] const NodeId& source() const noexcept { return graph_.name(source_); }
    [[nodiscard]] NodeIndex source_index() const noexcept { return source_; }
    [[nodiscard]] const IndexedGraph& graph() const noexcept { return graph_; }

  private:
    std::string graph_id_;
    IndexedGraph graph_;
    NodeIndex source_ = 0;
};

struct TimingSample {
    DomainId impl = DomainId::ieee_baseline;
    std::string graph_id;
    NodeId source;
    std::uint64_t iterations = 0;
    double elapsed = 0.0;  // seconds, monotonic clock

    [[nodiscard]] double per_iteration() const noexcept { return elapsed / static_cast<double>(iterations); }
};

/// Runs one untimed warm-up search, then `iterations` timed searches on the
/// steady clock. Every result is folded into a volatile sink so the searches
/// cannot be optimized away. Throws std::invalid_argument if iterations == 0.
[[nodiscard]] TimingSample time_dijkstra(const BenchCase& bench_case, DomainId domain, std::uint64_t iterations);

/// (baseline - candidate) / baseline * 100. Throws std::invalid_argument
/// unless baseline > 0.
[[nodiscard]] double improvement(double baseline, double candidate);

struct ComparisonRow {
    std::string graph_id;
    double baseline_mean = 0.0;
    double sentinel_mean = 0.0;
    double improvement_pct = 0.0;
};

struct ScheduledRun {
    std::size_t case_index;
    std::size_t repetition;
    DomainId domain;

    friend bool operator==(const ScheduledRun&, const ScheduledRun&) = default;
};

/// Graph by graph; within a graph, baseline and sentinel alternate, one pair
/// per repetition.
[[nodiscard]] std::vector<ScheduledRun> comparison_schedule(std::size_t graph_count, std::size_t repetitions);

struct ComparisonOptions {
    std::uint64_t iterations = 50'000;
    std::size_t repetitions = 2;
    double alpha = 0.01;
};

struct ComparisonResult {
    std::vector<TimingSample> samples;  // in schedule order
    std::vector<ComparisonRow> rows;    // one per graph, in first-seen order
    WelchReport welch;                  // a = sentinel, b = baseline
    double mean_row_improvement = 0.0;  // unweighted mean of rows[i].improvement_pct
    double pooled_improvement = 0.0;    // improvement of the grand means across all graphs
};

using SampleTimer = std::function<TimingSample(const BenchCase&, DomainId, std::uint64_t)>;

/// Executes comparison_schedule() and summarizes it. `timer` is replaceable
/// for testing; the default measures real searches.
[[nodiscard]] ComparisonResult run_comparison(std::span<const BenchCase> cases, const ComparisonOptions& options,
                                              const SampleTimer& timer = time_dijkstra);

/// Builds rows, aggregates, and the Welch report (per-iteration times,
/// sentinel vs baseline) from already-collected samples.
[[nodiscard]] ComparisonResult summarize_comparison(std::vector<TimingSample> samples, double alpha);

}  // namespace extinf
