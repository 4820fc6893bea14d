#include "extinf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace extinf {

namespace {

using Clock = std::chrono::steady_clock;
static_assert(Clock::is_steady);

volatile double g_sink = 0.0;

template <WeightDomain D>
void consume(const std::vector<typename D::value_type>& dist) {
    double acc = 0.0;
    for (const auto& d : dist) {
        const ExtendedWeight w = D::to_extended(d);
        acc += w.is_finite() ? *w.value() : 1.0;
    }
    g_sink = g_sink + acc;
}

template <WeightDomain D>
double timed_loop(const BenchCase& bench_case, std::uint64_t iterations) {
    const IndexedGraph& g = bench_case.graph();
    const NodeIndex source = bench_case.source_index();

    consume<D>(shortest_distances<D>(g, source));  // warm-up

    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < iterations; ++i) {
        consume<D>(shortest_distances<D>(g, source));
    }
    const auto stop = Clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

BenchCase::BenchCase(std::string graph_id, const Graph& graph, std::optional<NodeId> source)
    : graph_id_(std::move(graph_id)), graph_(graph) {
    if (graph_.node_count() == 0) {
        throw std::invalid_argument("graph '" + graph_id_ + "' has no nodes");
    }
    if (source) {
        const auto index = graph_.index_of(*source);
        if (!index) {
            throw UnknownNodeError(*source);
        }
        source_ = *index;
    }
}

TimingSample time_dijkstra(const BenchCase& bench_case, DomainId domain, std::uint64_t iterations) {
    if (iterations == 0) {
        throw std::invalid_argument("iterations must be at least 1");
    }
    TimingSample sample;
    sample.impl = domain;
    sample.graph_id = bench_case.graph_id();
    sample.source = bench_case.source();
    sample.iterations = iterations;
    switch (domain) {
        case DomainId::ieee_baseline:
            sample.elapsed = timed_loop<Binary64Domain>(bench_case, iterations);
            break;
        case DomainId::sentinel:
            sample.elapsed = timed_loop<SentinelDomain>(bench_case, iterations);
            break;
    }
    return sample;
}

double improvement(double baseline, double candidate) {
    if (!(baseline > 0.0)) {
        throw std::invalid_argument("baseline runtime must be positive");
    }
    return (baseline - candidate) / baseline * 100.0;
}

std::vector<ScheduledRun> comparison_schedule(std::size_t graph_count, std::size_t repetitions) {
    std::vector<ScheduledRun> schedule;
    schedule.reserve(graph_count * repetitions * 2);
    for (std::size_t g = 0; g < graph_count; ++g) {
        for (std::size_t r = 0; r < repetitions; ++r) {
            schedule.push_back({g, r, DomainId::ieee_baseline});
            schedule.push_back({g, r, DomainId::sentinel});
        }
    }
    return schedule;
}

ComparisonResult run_comparison(std::span<const BenchCase> cases, const ComparisonOptions& options,
                                const SampleTimer& timer) {
    if (cases.empty()) {
        throw std::invalid_argument("comparison needs at least one graph");
    }
    if (options.iterations == 0) {
        throw std::invalid_argument("iterations must be at least 1");
    }
    if (options.repetitions == 0 || cases.size() * options.repetitions < 2) {
        throw std::invalid_argument("comparison needs at least two samples per arm");
    }

    std::vector<TimingSample> samples;
    for (const auto& run : comparison_schedule(cases.size(), options.repetitions)) {
        samples.push_back(timer(cases[run.case_index], run.domain, options.iterations));
    }
    return summarize_comparison(std::move(samples), options.alpha);
}

ComparisonResult summarize_comparison(std::vector<TimingSample> samples, double alpha) {
    if (samples.empty()) {
        throw InsufficientSamplesError("no timing samples to summarize");
    }
    ComparisonResult result;
    std::vector<std::string> order;
    for (const auto& s : samples) {
        if (std::find(order.begin(), order.end(), s.graph_id) == order.end()) {
            order.push_back(s.graph_id);
        }
    }

    std::vector<double> baseline_all;
    std::vector<double> sentinel_all;
    for (const auto& s : samples) {
        (s.impl == DomainId::ieee_baseline ? baseline_all : sentinel_all).push_back(s.per_iteration());
    }

    double row_sum = 0.0;
    for (const auto& id : order) {
        std::vector<double> base;
        std::vector<double> sent;
        for (const auto& s : samples) {
            if (s.graph_id == id) {
                (s.impl == DomainId::ieee_baseline ? base : sent).push_back(s.per_iteration());
            }
        }
        if (base.empty() || sent.empty()) {
            throw std::invalid_argument("graph '" + id + "' is missing samples for one arm");
        }
        ComparisonRow row{id, mean(base), mean(sent), 0.0};
        row.improvement_pct = improvement(row.baseline_mean, row.sentinel_mean);
        row_sum += row.improvement_pct;
        result.rows.push_back(std::move(row));
    }

    result.mean_row_improvement = row_sum / static_cast<double>(result.rows.size());
    result.pooled_improvement = improvement(mean(baseline_all), mean(sentinel_all));
    result.welch = welch_test(sentinel_all, baseline_all, alpha);
    result.samples = std::move(samples);
    return result;
}

}  // namespace extinf
