#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "extinf/bench.hpp"
#include "extinf/fixtures.hpp"
#include "extinf/report.hpp"

namespace extinf {
namespace {

TEST(Improvement, Examples) {
    EXPECT_NEAR(improvement(0.1874, 0.1647), 12.11, 0.005);
    EXPECT_NEAR(improvement(2.0755, 1.8738), 9.72, 0.005);
    EXPECT_EQ(improvement(3.5, 3.5), 0.0);
    EXPECT_LT(improvement(1.0, 1.5), 0.0);
}

TEST(Improvement, SwapIdentity) {
    for (auto [a, b] : {std::pair{0.1874, 0.1647}, {3277.814, 2764.523}, {1.0, 7.0}}) {
        EXPECT_NEAR(improvement(a, b) * a, -improvement(b, a) * b, 1e-9);
        EXPECT_NEAR(improvement(a, b) * a, (a - b) * 100.0, 1e-9);
    }
}

TEST(Improvement, NonPositiveBaseline) {
    EXPECT_THROW((void)improvement(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW((void)improvement(-1.0, 1.0), std::invalid_argument);
    EXPECT_THROW((void)improvement(NAN, 1.0), std::invalid_argument);
}

TEST(BenchCase, SourceResolution) {
    const BenchCase by_default("rw", fixture("Real_World_Like_1"));
    EXPECT_EQ(by_default.source(), "Gas_Station");
    const BenchCase explicit_source("rw", fixture("Real_World_Like_1"), "Home");
    EXPECT_EQ(explicit_source.source(), "Home");
    EXPECT_THROW(BenchCase("rw", fixture("Real_World_Like_1"), "Mars"), UnknownNodeError);
    EXPECT_THROW(BenchCase("empty", Graph{}), std::invalid_argument);
    EXPECT_THROW(BenchCase("bad", Graph(Adjacency{{"A", {{"B", 1}}}})), InvalidGraphError);
}

TEST(TimeDijkstra, RecordsWhatItRan) {
    const BenchCase c("Star_Graph_1", fixture("Star_Graph_1"), "A");
    for (DomainId d : {DomainId::ieee_baseline, DomainId::sentinel}) {
        const TimingSample s = time_dijkstra(c, d, 200);
        EXPECT_EQ(s.impl, d);
        EXPECT_EQ(s.graph_id, "Star_Graph_1");
        EXPECT_EQ(s.source, "A");
        EXPECT_EQ(s.iterations, 200u);
        EXPECT_GT(s.elapsed, 0.0);
        EXPECT_DOUBLE_EQ(s.per_iteration(), s.elapsed / 200.0);
    }
    EXPECT_THROW((void)time_dijkstra(c, DomainId::sentinel, 0), std::invalid_argument);
}

TEST(Schedule, AlternatesWithinEachGraph) {
    const auto s = comparison_schedule(3, 2);
    ASSERT_EQ(s.size(), 12u);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(s[i].case_index, i / 4);
        EXPECT_EQ(s[i].repetition, (i % 4) / 2);
        EXPECT_EQ(s[i].domain, i % 2 == 0 ? DomainId::ieee_baseline : DomainId::sentinel);
    }
}

TEST(Schedule, SamplesPerArm) {
    for (std::size_t g : {1u, 4u, 10u}) {
        for (std::size_t r : {1u, 2u, 5u}) {
            const auto s = comparison_schedule(g, r);
            const auto sentinel = std::count_if(s.begin(), s.end(), [](const auto& x) { return x.domain == DomainId::sentinel; });
            EXPECT_EQ(static_cast<std::size_t>(sentinel), g * r);
            EXPECT_EQ(s.size(), 2 * g * r);
        }
    }
}

// Deterministic stand-in for the clock: baseline 1.0 s, sentinel 0.9 s,
// nudged per call so variances are non-zero.
SampleTimer fake_timer(std::vector<ScheduledRun>* log = nullptr) {
    auto calls = std::make_shared<int>(0);
    return [calls, log](const BenchCase& c, DomainId d, std::uint64_t iterations) {
        const int k = (*calls)++;
        if (log != nullptr) {
            log->push_back({0, 0, d});
        }
        const double base = d == DomainId::ieee_baseline ? 1.0 : 0.9;
        return TimingSample{d, c.graph_id(), c.source(), iterations, (base + 0.001 * (k % 3)) * iterations};
    };
}

TEST(RunComparison, SingleGraphTwoRepetitions) {
    const std::vector<BenchCase> cases{{"Cycle_Graph_1", fixture("Cycle_Graph_1")}};
    std::vector<ScheduledRun> log;
    const auto result = run_comparison(cases, {10, 2, 0.01}, fake_timer(&log));
    ASSERT_EQ(result.rows.size(), 1u);
    EXPECT_EQ(result.welch.n_a, 2u);
    EXPECT_EQ(result.welch.n_b, 2u);
    ASSERT_EQ(log.size(), 4u);
    EXPECT_EQ(log[0].domain, DomainId::ieee_baseline);
    EXPECT_EQ(log[1].domain, DomainId::sentinel);
    EXPECT_NEAR(result.rows[0].improvement_pct, 10.0, 0.2);
    EXPECT_LT(result.welch.mean_a, result.welch.mean_b);
}

TEST(RunComparison, TenGraphsPoolForty) {
    std::vector<BenchCase> cases;
    for (const auto& id : benchmark_fixture_ids()) {
        cases.emplace_back(id, fixture(id));
    }
    const auto result = run_comparison(cases, {5, 2, 0.01}, fake_timer());
    EXPECT_EQ(result.samples.size(), 40u);
    EXPECT_EQ(result.welch.n_a + result.welch.n_b, 40u);
    EXPECT_EQ(result.rows.size(), 10u);
    EXPECT_TRUE(result.welch.reject_null);
}

TEST(RunComparison, Errors) {
    EXPECT_THROW((void)run_comparison({}, {10, 2, 0.01}, fake_timer()), std::invalid_argument);
    const std::vector<BenchCase> one{{"c", fixture("Cycle_Graph_1")}};
    // One repetition of one graph leaves a single sample per arm.
    EXPECT_THROW((void)run_comparison(one, {10, 1, 0.01}, fake_timer()), std::invalid_argument);
    EXPECT_THROW((void)run_comparison(one, {0, 2, 0.01}), std::invalid_argument);
}

TEST(RunComparison, RealTimerEndToEnd) {
    const std::vector<BenchCase> cases{{"Dense_Graph_1", fixture("Dense_Graph_1")}, {"Star_Graph_1", fixture("Star_Graph_1")}};
    const auto result = run_comparison(cases, {100, 2, 0.01});
    EXPECT_EQ(result.samples.size(), 8u);
    for (const auto& row : result.rows) {
        EXPECT_GT(row.baseline_mean, 0.0);
        EXPECT_GT(row.sentinel_mean, 0.0);
    }
    EXPECT_GE(result.welch.p_one_tailed, 0.0);
    EXPECT_LE(result.welch.p_one_tailed, 1.0);
}

// The printed category means, fed in as if they were measured.
const std::vector<std::tuple<std::string, double, double, double>> kCategoryMeans{
    {"Linear Chain", 0.1874, 0.1647, 12.1},     {"Sparse Tree", 0.2378, 0.1968, 17.2},
    {"Dense Graph", 0.1863, 0.1759, 5.6},       {"Star Graph", 0.1847, 0.1788, 3.2},
    {"Disconnected Graph", 0.2051, 0.1883, 8.2}, {"Cycle Graph", 0.1431, 0.1269, 11.3},
    {"Equal Weights", 0.1597, 0.1513, 5.3},     {"Large Uniform Graph", 0.4768, 0.4391, 7.9},
    {"Worst-Case Tie", 0.1677, 0.1440, 14.2},   {"Real-World-Like", 0.1976, 0.1727, 12.6},
};

std::vector<TimingSample> synthetic_samples() {
    std::vector<TimingSample> samples;
    for (const auto& [name, baseline, sentinel, printed] : kCategoryMeans) {
        samples.push_back({DomainId::ieee_baseline, name, "A", 1, baseline});
        samples.push_back({DomainId::sentinel, name, "A", 1, sentinel});
    }
    return samples;
}

TEST(Summarize, CategoryMeansReproduceImprovementColumn) {
    const auto result = summarize_comparison(synthetic_samples(), 0.01);
    ASSERT_EQ(result.rows.size(), kCategoryMeans.size());
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        EXPECT_EQ(result.rows[i].graph_id, std::get<0>(kCategoryMeans[i]));
        EXPECT_NEAR(result.rows[i].improvement_pct, std::get<3>(kCategoryMeans[i]), 0.15) << result.rows[i].graph_id;
    }
    EXPECT_NEAR(result.mean_row_improvement, 9.75, 0.01);
    EXPECT_EQ(result.welch.n_a, 10u);
}

TEST(Summarize, Errors) {
    EXPECT_THROW((void)summarize_comparison({}, 0.01), InsufficientSamplesError);
    auto samples = synthetic_samples();
    samples.resize(1);
    EXPECT_THROW((void)summarize_comparison(samples, 0.01), std::exception);
}

TEST(Report, RowsCsvShape) {
    const auto result = summarize_comparison(synthetic_samples(), 0.01);
    std::ostringstream os;
    write_rows_csv(os, result.rows);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kRowsCsvHeader);
    std::size_t n = 0;
    while (std::getline(in, line)) {
        const auto fields = split_csv_line(line);
        ASSERT_EQ(fields.size(), 4u) << line;
        EXPECT_EQ(fields[0], result.rows[n].graph_id);
        EXPECT_EQ(std::stod(fields[1]), result.rows[n].baseline_mean);
        EXPECT_EQ(std::stod(fields[3]), result.rows[n].improvement_pct);
        ++n;
    }
    EXPECT_EQ(n, 10u);
}

TEST(Report, SamplesCsvShape) {
    const auto samples = synthetic_samples();
    std::ostringstream os;
    write_samples_csv(os, samples);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kSamplesCsvHeader);
    std::getline(in, line);
    EXPECT_EQ(split_csv_line(line), (std::vector<std::string>{"ieee_baseline", "Linear Chain", "A", "1", "0.1874", "0.1874"}));
}

TEST(Report, CsvQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(split_csv_line("\"a,b\",c,\"d\"\"e\""), (std::vector<std::string>{"a,b", "c", "d\"e"}));
    EXPECT_EQ(split_csv_line("x,,y"), (std::vector<std::string>{"x", "", "y"}));
}

TEST(Report, ComparisonJsonShape) {
    const auto result = summarize_comparison(synthetic_samples(), 0.01);
    const auto j = nlohmann::json::parse(comparison_to_json(result));
    ASSERT_TRUE(j.at("rows").is_array());
    EXPECT_EQ(j["rows"].size(), 10u);
    for (const auto& row : j["rows"]) {
        EXPECT_TRUE(row.at("graph_id").is_string());
        EXPECT_TRUE(row.at("baseline_mean").is_number());
        EXPECT_TRUE(row.at("sentinel_mean").is_number());
        EXPECT_TRUE(row.at("improvement_pct").is_number());
    }
    EXPECT_TRUE(j.at("aggregates").at("mean_of_row_improvements_pct").is_number());
    EXPECT_TRUE(j.at("aggregates").at("improvement_of_pooled_means_pct").is_number());
    EXPECT_EQ(j.at("welch").at("n_a"), 10);
    EXPECT_EQ(j.at("welch").at("alternative"), "mean_a_less");
    EXPECT_TRUE(j.at("welch").at("reject_null").is_boolean());
    EXPECT_TRUE(j.at("verdict").is_string());
    EXPECT_EQ(j.at("samples").size(), 20u);
    EXPECT_EQ(j["samples"][1].at("impl"), "sentinel");
}

TEST(Report, TableListsEveryRow) {
    const auto result = summarize_comparison(synthetic_samples(), 0.01);
    std::ostringstream os;
    os.precision(3);
    write_comparison_table(os, result);
    const std::string text = os.str();
    for (const auto& [name, b, s, p] : kCategoryMeans) {
        EXPECT_NE(text.find(name), std::string::npos) << name;
    }
    EXPECT_NE(text.find("H0"), std::string::npos);
    EXPECT_EQ(os.precision(), 3);
}

TEST(Report, FormatNames) {
    EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
    EXPECT_EQ(parse_report_format("json"), ReportFormat::json);
    EXPECT_EQ(parse_report_format("table"), ReportFormat::table);
    EXPECT_FALSE(parse_report_format("xml"));
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(12.0), "12");
}

}  // namespace
}  // namespace extinf
