#include "extinf/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extinf/bench.hpp"
#include "extinf/fixtures.hpp"
#include "extinf/generator.hpp"
#include "extinf/report.hpp"

namespace extinf::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GenOptions {
    std::string kind;
    std::size_t nodes = 0;
    std::optional<std::uint64_t> seed;
    std::int64_t min_weight = 1;
    std::int64_t max_weight = 10;
    std::vector<double> weights;
    std::string output;
};

struct RunOptions {
    std::string graph;
    std::string fixture;
    std::string source;
    std::string domain = "sentinel";
    std::uint64_t iterations = 50'000;
    std::size_t repetitions = 1;
    std::string format = "csv";
    std::string output;
};

struct CompareOptions {
    std::string fixtures;
    std::vector<std::string> graphs;
    std::string source;
    std::uint64_t iterations = 50'000;
    std::size_t repetitions = 2;
    double alpha = 0.01;
    std::string format = "table";
    std::string output;
};

struct TtestOptions {
    std::string sample_a;
    std::string sample_b;
    double alpha = 0.01;
    std::string format = "json";
    std::string output;
};

struct FixturesOptions {
    std::string emit;
    bool routes = false;
    std::string output;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw UsageError("--alpha must lie strictly between 0 and 1");
    }
}

ReportFormat require_format(const std::string& name) {
    if (auto f = parse_report_format(name)) {
        return *f;
    }
    throw UsageError("unknown format '" + name + "'");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    const char* env = std::getenv(kSeedEnvVar);
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    std::uint64_t seed = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer: '" + env + "'");
    }
    return seed;
}

Graph load_graph(const std::string& path, std::ostream& err) {
    auto parsed = parse_graph(read_file(path));
    for (const auto& w : parsed.warnings) {
        err << "warning: " << path << ": " << w << '\n';
    }
    return std::move(parsed.graph);
}

const FixtureInfo& require_fixture(std::string_view id) {
    try {
        return fixture_info(id);
    } catch (const UnknownFixtureError& e) {
        throw UsageError(e.what());
    }
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    const auto kind = parse_graph_kind(o.kind);
    if (!kind) {
        throw UsageError("unknown graph kind '" + o.kind + "'");
    }
    GeneratorSpec spec;
    spec.kind = *kind;
    spec.node_count = o.nodes;
    spec.weights = {o.min_weight, o.max_weight};
    spec.seed = resolve_seed(o.seed);
    spec.fixed_weights = o.weights;
    try {
        check_spec(spec);
    } catch (const GeneratorSpecError& e) {
        throw UsageError(e.what());
    }
    const Graph g = generate(spec);
    emit(o.output, out, emit_graph(g) + "\n");
    (o.output.empty() ? err : out) << "generated " << o.kind << " (seed " << spec.seed << "): " << g.node_count()
                                   << " nodes, " << g.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
    if (o.graph.empty() == o.fixture.empty()) {
        throw UsageError("run needs exactly one of --graph or --fixture");
    }
    const auto domain = parse_domain(o.domain);
    if (!domain) {
        throw UsageError("unknown domain '" + o.domain + "'");
    }
    const ReportFormat format = require_format(o.format);
    if (format == ReportFormat::table) {
        throw UsageError("run writes csv or json");
    }

    std::optional<NodeId> source;
    if (!o.source.empty()) {
        source = o.source;
    }
    std::optional<BenchCase> bench_case;
    if (!o.fixture.empty()) {
        const auto& info = require_fixture(o.fixture);
        bench_case.emplace(std::string(info.id), fixture(info.id), source.value_or(NodeId(info.source)));
    } else {
        bench_case.emplace(std::filesystem::path(o.graph).stem().string(), load_graph(o.graph, err), source);
    }

    std::vector<TimingSample> samples;
    for (std::size_t r = 0; r < o.repetitions; ++r) {
        samples.push_back(time_dijkstra(*bench_case, *domain, o.iterations));
    }
    if (format == ReportFormat::csv) {
        std::ostringstream csv;
        write_samples_csv(csv, samples);
        emit(o.output, out, csv.str());
    } else {
        emit(o.output, out, samples_to_json(samples) + "\n");
    }
    return kExitOk;
}

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
    check_alpha(o.alpha);
    const ReportFormat format = require_format(o.format);
    if (o.fixtures.empty() && o.graphs.empty()) {
        throw UsageError("compare needs --fixtures and/or --graph");
    }

    std::vector<std::string> fixture_ids;
    if (o.fixtures == "all") {
        fixture_ids = benchmark_fixture_ids();
    } else if (!o.fixtures.empty()) {
        std::string id;
        std::istringstream list(o.fixtures);
        while (std::getline(list, id, ',')) {
            if (!id.empty()) {
                fixture_ids.push_back(id);
            }
        }
    }

    std::optional<NodeId> source;
    if (!o.source.empty()) {
        source = o.source;
    }
    std::vector<BenchCase> cases;
    for (const auto& id : fixture_ids) {
        const auto& info = require_fixture(id);
        cases.emplace_back(std::string(info.id), fixture(info.id), source.value_or(NodeId(info.source)));
    }
    for (const auto& path : o.graphs) {
        cases.emplace_back(std::filesystem::path(path).stem().string(), load_graph(path, err), source);
    }

    const ComparisonResult result = run_comparison(cases, {o.iterations, o.repetitions, o.alpha});
    std::ostringstream report;
    switch (format) {
        case ReportFormat::csv:
            write_rows_csv(report, result.rows);
            err << verdict_line(result.welch) << '\n';
            break;
        case ReportFormat::json:
            report << comparison_to_json(result) << '\n';
            break;
        case ReportFormat::table:
            write_comparison_table(report, result);
            break;
    }
    emit(o.output, out, report.str());
    return kExitOk;
}

std::vector<double> read_sample_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<double> values;
    std::optional<std::size_t> column;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r" || line.front() == '#') {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (!column) {
            // Header: prefer the per_iteration column of `run` output.
            column = 0;
            bool header = false;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                double ignored = 0.0;
                const auto& f = fields[i];
                if (std::from_chars(f.data(), f.data() + f.size(), ignored).ec != std::errc{}) {
                    header = true;
                }
                if (f == "per_iteration") {
                    column = i;
                }
            }
            if (header) {
                continue;
            }
        }
        if (*column >= fields.size()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": missing sample column");
        }
        const std::string& f = fields[*column];
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || ptr != f.data() + f.size()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": not a number: '" + f + "'");
        }
        values.push_back(v);
    }
    return values;
}

int cmd_ttest(const TtestOptions& o, std::ostream& out, std::ostream& err) {
    check_alpha(o.alpha);
    const ReportFormat format = require_format(o.format);
    const SampleSet a{read_sample_file(o.sample_a), o.sample_a};
    const SampleSet b{read_sample_file(o.sample_b), o.sample_b};
    const WelchReport report = welch_test(a, b, o.alpha);
    if (format == ReportFormat::json) {
        emit(o.output, out, to_json(report) + "\n");
        err << verdict_line(report) << '\n';
    } else {
        std::ostringstream text;
        text << "a: " << a.label << " (n=" << report.n_a << ", mean=" << report.mean_a << ")\n"
             << "b: " << b.label << " (n=" << report.n_b << ", mean=" << report.mean_b << ")\n"
             << "t=" << report.t << " df=" << report.df << " p_one_tailed=" << report.p_one_tailed << '\n'
             << verdict_line(report) << '\n';
        emit(o.output, out, text.str());
    }
    return kExitOk;
}

int cmd_fixtures(const FixturesOptions& o, std::ostream& out) {
    if (o.routes) {
        nlohmann::json routes = nlohmann::json::array();
        for (const auto& r : route_catalog()) {
            routes.push_back({
                {"label", r.label},
                {"origin", {r.origin.latitude, r.origin.longitude}},
                {"radius", r.radius},
                {"destination", {r.destination.latitude, r.destination.longitude}},
            });
        }
        emit(o.output, out, routes.dump(2) + "\n");
        return kExitOk;
    }
    if (!o.emit.empty()) {
        emit(o.output, out, emit_graph(fixture(require_fixture(o.emit).id)) + "\n");
        return kExitOk;
    }
    std::ostringstream list;
    for (const auto& f : fixture_catalog()) {
        const Graph g = fixture(f.id);
        list << f.id << '\t' << f.category << '\t' << "source=" << f.source << '\t' << g.node_count() << " nodes\t"
             << g.edge_count() << " edges\n";
    }
    emit(o.output, out, list.str());
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shortest-path benchmarks comparing IEEE infinity with a sentinel infinity", "extinf-bench"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded synthetic graph as JSON");
    gen_cmd->add_option("--kind", gen.kind, "Graph kind (linear_chain, sparse_tree, dense, star, disconnected, cycle, "
                                            "equal_weights, grid, worst_case_tie, real_world_like)")
        ->required();
    gen_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
    gen_cmd->add_option("--seed", gen.seed, std::string("RNG seed (default: $") + kSeedEnvVar + ", else 0)");
    gen_cmd->add_option("--min-weight", gen.min_weight, "Smallest random edge weight")->capture_default_str();
    gen_cmd->add_option("--max-weight", gen.max_weight, "Largest random edge weight")->capture_default_str();
    gen_cmd->add_option("--weights", gen.weights, "Fixed edge weights, consumed in generation order")
        ->delimiter(',');
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Time one weight domain on one graph");
    run_cmd->add_option("--graph", run_opts.graph, "Graph JSON file");
    run_cmd->add_option("--fixture", run_opts.fixture, "Built-in fixture id");
    run_cmd->add_option("--source", run_opts.source, "Source node (default: fixture start or smallest id)");
    run_cmd->add_option("--domain", run_opts.domain, "ieee_baseline or sentinel")->capture_default_str();
    run_cmd->add_option("--iterations", run_opts.iterations, "Searches per sample")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--repetitions", run_opts.repetitions, "Samples to record")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--format", run_opts.format, "csv or json")->capture_default_str();
    run_cmd->add_option("-o,--output", run_opts.output, "Output file (default: stdout)");

    CompareOptions cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Paired benchmark of both domains with a Welch test");
    cmp_cmd->add_option("--fixtures", cmp.fixtures, "'all' or a comma-separated list of fixture ids");
    cmp_cmd->add_option("--graph", cmp.graphs, "Graph JSON file (repeatable)");
    cmp_cmd->add_option("--source", cmp.source, "Source node for every graph");
    cmp_cmd->add_option("--iterations", cmp.iterations, "Searches per sample")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--repetitions", cmp.repetitions, "Samples per graph and domain")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--alpha", cmp.alpha, "Significance level")->capture_default_str();
    cmp_cmd->add_option("--format", cmp.format, "table, csv, or json")->capture_default_str();
    cmp_cmd->add_option("-o,--output", cmp.output, "Output file (default: stdout)");

    TtestOptions tt;
    auto* tt_cmd = app.add_subcommand("ttest", "One-tailed Welch test (Ha: mean of A < mean of B) over two sample files");
    tt_cmd->add_option("a", tt.sample_a, "Sample file A")->required();
    tt_cmd->add_option("b", tt.sample_b, "Sample file B")->required();
    tt_cmd->add_option("--alpha", tt.alpha, "Significance level")->capture_default_str();
    tt_cmd->add_option("--format", tt.format, "json or table")->capture_default_str();
    tt_cmd->add_option("-o,--output", tt.output, "Output file (default: stdout)");

    FixturesOptions fx;
    auto* fx_cmd = app.add_subcommand("fixtures", "List or print the built-in test graphs");
    fx_cmd->add_option("--emit", fx.emit, "Print one fixture as canonical JSON");
    fx_cmd->add_flag("--routes", fx.routes, "Print the road-route metadata table");
    fx_cmd->add_option("-o,--output", fx.output, "Output file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, out, err);
        }
        if (run_cmd->parsed()) {
            return cmd_run(run_opts, out, err);
        }
        if (cmp_cmd->parsed()) {
            return cmd_compare(cmp, out, err);
        }
        if (tt_cmd->parsed()) {
            return cmd_ttest(tt, out, err);
        }
        return cmd_fixtures(fx, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace extinf::cli
