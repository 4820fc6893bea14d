#include "extinf/report.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace extinf {

namespace {

using json = nlohmann::json;

json sample_json(const TimingSample& s) {
    return {
        {"impl", to_string(s.impl)},
        {"graph_id", s.graph_id},
        {"source", s.source},
        {"iterations", s.iterations},
        {"elapsed", s.elapsed},
        {"per_iteration", s.per_iteration()},
    };
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
    if (name == "csv") {
        return ReportFormat::csv;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    if (name == "table") {
        return ReportFormat::table;
    }
    return std::nullopt;
}

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    return fields;
}

void write_rows_csv(std::ostream& os, std::span<const ComparisonRow> rows) {
    os << kRowsCsvHeader << '\n';
    for (const auto& r : rows) {
        os << csv_field(r.graph_id) << ',' << format_number(r.baseline_mean) << ','
           << format_number(r.sentinel_mean) << ',' << format_number(r.improvement_pct) << '\n';
    }
}

void write_samples_csv(std::ostream& os, std::span<const TimingSample> samples) {
    os << kSamplesCsvHeader << '\n';
    for (const auto& s : samples) {
        os << to_string(s.impl) << ',' << csv_field(s.graph_id) << ',' << csv_field(s.source) << ',' << s.iterations
           << ',' << format_number(s.elapsed) << ',' << format_number(s.per_iteration()) << '\n';
    }
}

std::string samples_to_json(std::span<const TimingSample> samples) {
    json out = json::array();
    for (const auto& s : samples) {
        out.push_back(sample_json(s));
    }
    return out.dump(2);
}

std::string comparison_to_json(const ComparisonResult& result) {
    json rows = json::array();
    for (const auto& r : result.rows) {
        rows.push_back({
            {"graph_id", r.graph_id},
            {"baseline_mean", r.baseline_mean},
            {"sentinel_mean", r.sentinel_mean},
            {"improvement_pct", r.improvement_pct},
        });
    }
    json samples = json::array();
    for (const auto& s : result.samples) {
        samples.push_back(sample_json(s));
    }
    const json doc = {
        {"rows", std::move(rows)},
        {"aggregates",
         {
             {"mean_of_row_improvements_pct", result.mean_row_improvement},
             {"improvement_of_pooled_means_pct", result.pooled_improvement},
         }},
        {"welch", json::parse(to_json(result.welch))},
        {"verdict", verdict_line(result.welch)},
        {"samples", std::move(samples)},
    };
    return doc.dump(2);
}

void write_comparison_table(std::ostream& os, const ComparisonResult& result) {
    constexpr int kName = 24;
    constexpr int kCol = 16;
    const auto flags = os.flags();
    const auto precision = os.precision();
    os << std::left << std::setw(kName) << "Graph" << std::right << std::setw(kCol) << "IEEE inf (s)"
       << std::setw(kCol) << "Sentinel (s)" << std::setw(kCol) << "% Improvement" << '\n';
    os << std::string(kName + 3 * kCol, '-') << '\n';
    for (const auto& r : result.rows) {
        os << std::left << std::setw(kName) << r.graph_id << std::right << std::scientific << std::setprecision(4)
           << std::setw(kCol) << r.baseline_mean << std::setw(kCol) << r.sentinel_mean << std::fixed
           << std::setprecision(2) << std::setw(kCol) << r.improvement_pct << '\n';
    }
    os << std::string(kName + 3 * kCol, '-') << '\n';
    os << std::fixed << std::setprecision(2);
    os << "mean of per-graph improvements: " << result.mean_row_improvement << "%\n";
    os << "improvement of pooled means:    " << result.pooled_improvement << "%\n";
    os.flags(flags);
    os.precision(precision);
    os << "welch: t=" << result.welch.t << " df=" << result.welch.df << " n_sentinel=" << result.welch.n_a
       << " n_baseline=" << result.welch.n_b << '\n';
    os << verdict_line(result.welch) << '\n';
}

}  // namespace extinf
