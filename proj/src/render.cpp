#include "legadj/render.hpp"

#include <sstream>

namespace legadj {

namespace {

std::string str(const ExactInteger& value) { return value.str(); }

ExactInteger integer_field(const nlohmann::json& json, const char* key) {
  const std::string text = json.at(key).get<std::string>();
  if (text.empty()) throw std::invalid_argument(std::string("empty number for ") + key);
  return ExactInteger(text);
}

int int_field(const nlohmann::json& json, const char* key) {
  return std::stoi(json.at(key).get<std::string>());
}

std::string dump(const nlohmann::json& json) { return json.dump(2) + "\n"; }

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "markdown") return OutputFormat::Markdown;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Markdown: return "markdown";
  }
  return "json";
}

nlohmann::json report_to_json(const AdjacencyReport& report) {
  return {
      {"germ", format_germ(report.germ)},
      {"type", format_type(report.type)},
      {"codim", std::to_string(report.type.codim())},
      {"N", std::to_string(report.n)},
      {"J", str(report.j)},
      {"I0", str(report.i0)},
      {"I1", str(report.i1)},
      {"I2term", str(report.i2_term)},
      {"I3term", str(report.i3_term)},
      {"C0", str(report.c0)},
      {"C1", str(report.c1)},
      {"pi2Count", str(report.pi2_count)},
      {"pi3Count", str(report.pi3_count)},
  };
}

AdjacencyReport report_from_json(const nlohmann::json& json) {
  AdjacencyReport report;
  report.germ = parse_germ(json.at("germ").get<std::string>());
  report.type = parse_type(json.at("type").get<std::string>());
  if (int_field(json, "codim") != report.type.codim()) {
    throw std::invalid_argument("codim does not match type");
  }
  report.evaluated_delta = report.germ.delta();
  report.n = int_field(json, "N");
  report.j = integer_field(json, "J");
  report.i0 = integer_field(json, "I0");
  report.i1 = integer_field(json, "I1");
  report.i2_term = integer_field(json, "I2term");
  report.i3_term = integer_field(json, "I3term");
  report.c0 = integer_field(json, "C0");
  report.c1 = integer_field(json, "C1");
  report.pi2_count = integer_field(json, "pi2Count");
  report.pi3_count = integer_field(json, "pi3Count");
  return report;
}

std::string render_report(const AdjacencyReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json:
      return dump(report_to_json(report));
    case OutputFormat::Csv:
      out << kReportCsvHeader << "\n"
          << format_germ(report.germ) << ',' << format_type(report.type) << ','
          << report.type.codim() << ',' << report.j << ',' << report.i0 << ','
          << report.i1 << ',' << report.i2_term << ',' << report.i3_term << ','
          << report.c0 << ',' << report.c1 << ',' << report.pi2_count << ','
          << report.pi3_count << ',' << report.n << "\n";
      return out.str();
    case OutputFormat::Markdown:
      out << "## J_{" << format_type(report.type) << "}(" << format_germ(report.germ)
          << ") = " << report.j << "\n\n"
          << "| quantity | value |\n"
          << "|---|---:|\n"
          << "| J | " << report.j << " |\n"
          << "| I0 | " << report.i0 << " |\n"
          << "| I1 | " << report.i1 << " |\n"
          << "| I2term | " << report.i2_term << " |\n"
          << "| I3term | " << report.i3_term << " |\n"
          << "| C0 | " << report.c0 << " |\n"
          << "| C1 | " << report.c1 << " |\n"
          << "| pi2Count | " << report.pi2_count << " |\n"
          << "| pi3Count | " << report.pi3_count << " |\n"
          << "| codim | " << report.type.codim() << " |\n"
          << "| N | " << report.n << " |\n";
      return out.str();
  }
  return {};
}

std::string render_table(const DGerm& germ, const std::vector<CatalogEntry>& table,
                         OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& entry : table) rows.push_back(report_to_json(entry.report));
      return dump({{"germ", format_germ(germ)}, {"rows", std::move(rows)}});
    }
    case OutputFormat::Csv:
      out << kTableCsvHeader << "\n";
      for (const auto& [type, r] : table) {
        out << format_type(type) << ',' << type.codim() << ',' << r.j << ',' << r.i0 << ','
            << r.i1 << ',' << r.i2_term << ',' << r.i3_term << ',' << r.n << "\n";
      }
      return out.str();
    case OutputFormat::Markdown:
      out << "## Adjacencies of " << format_germ(germ) << "\n\n"
          << "| type | codim | J | I0 | I1 | I2term | I3term | N |\n"
          << "|---|---:|---:|---:|---:|---:|---:|---:|\n";
      for (const auto& [type, r] : table) {
        out << "| " << format_type(type) << " | " << type.codim() << " | " << r.j << " | "
            << r.i0 << " | " << r.i1 << " | " << r.i2_term << " | " << r.i3_term << " | "
            << r.n << " |\n";
      }
      return out.str();
  }
  return {};
}

}  // namespace legadj
