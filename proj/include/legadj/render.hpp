#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "legadj/adjacency.hpp"
#include "legadj/catalog.hpp"

namespace legadj {

enum class OutputFormat { Json, Csv, Markdown };

/// Accepts "json", "csv" or "markdown". Throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);
std::string format_name(OutputFormat format);

inline constexpr std::string_view kTableCsvHeader = "type,codim,J,I0,I1,I2term,I3term,N";
inline constexpr std::string_view kReportCsvHeader =
    "germ,type,codim,J,I0,I1,I2term,I3term,C0,C1,pi2Count,pi3Count,N";

// All numbers go out as decimal strings.
nlohmann::json report_to_json(const AdjacencyReport& report);
AdjacencyReport report_from_json(const nlohmann::json& json);

std::string render_report(const AdjacencyReport& report, OutputFormat format);
std::string render_table(const DGerm& germ, const std::vector<CatalogEntry>& table,
                         OutputFormat format);

}  // namespace legadj
