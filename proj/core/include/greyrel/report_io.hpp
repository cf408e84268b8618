#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "greyrel/pipeline.hpp"

namespace greyrel {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Text, Csv, Json };

/// "text", "csv", "json-report" ("json" is accepted as a synonym).
ReportFormat parse_report_format(std::string_view text);

/// Renders a report. Output depends only on the report contents, so equal
/// reports render to identical bytes.
std::string emit_report(const Report& report, ReportFormat format);

/// Writes emit_report(report, format) to `path`; throws Error when the
/// destination cannot be written.
void write_report(const Report& report, ReportFormat format, const std::filesystem::path& path);

/// Machine-readable form; mirrors Report field for field and embeds the
/// canonical problem document so the report can be re-run.
nlohmann::json report_to_json(const Report& report);

/// Inverse of report_to_json. Throws ValidationError on malformed input.
Report report_from_json(const nlohmann::json& doc);

/// "G2 > G5 > G1 = G3 > G4" style summary of the final order.
std::string format_final_order(const Report& report);

/// Same summary for one method's ranks.
std::string format_order(const std::vector<std::string>& plans, std::span<const int> ranks);

}  // namespace greyrel
