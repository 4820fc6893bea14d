#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extinf/bench.hpp"

namespace extinf {

enum class ReportFormat { csv, json, table };

[[nodiscard]] std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

/// Shortest decimal that reads back to the same double.
[[nodiscard]] std::string format_number(double value);

/// Quotes a CSV field when it contains a comma, quote, or line break.
[[nodiscard]] std::string csv_field(std::string_view text);

/// Splits one CSV line, honouring double-quoted fields.
[[nodiscard]] std::vector<std::string> split_csv_line(std::string_view line);

inline constexpr std::string_view kRowsCsvHeader = "graph_id,baseline_mean,sentinel_mean,improvement_pct";
inline constexpr std::string_view kSamplesCsvHeader = "impl,graph_id,source,iterations,elapsed,per_iteration";

void write_rows_csv(std::ostream& os, std::span<const ComparisonRow> rows);
void write_samples_csv(std::ostream& os, std::span<const TimingSample> samples);

/// {"rows": [...], "aggregates": {...}, "welch": {...}, "samples": [...]}
[[nodiscard]] std::string comparison_to_json(const ComparisonResult& result);
[[nodiscard]] std::string samples_to_json(std::span<const TimingSample> samples);

/// Fixed-width table (graph, baseline, sentinel, % improvement), both
/// aggregates, and the verdict line.
void write_comparison_table(std::ostream& os, const ComparisonResult& result);

}  // namespace extinf
