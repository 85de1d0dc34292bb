#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "legadj/render.hpp"
#include "legadj/verify.hpp"

using namespace legadj;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("markdown") == OutputFormat::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK(format_name(OutputFormat::Csv) == "csv");
}

TEST_CASE("report JSON carries numbers as strings and round-trips") {
  const auto report = adjacency_index(DGerm(4, -1), parse_type("A1^2"));
  const std::string json_text = render_report(report, OutputFormat::Json);
  const auto json = nlohmann::json::parse(json_text);
  CHECK(json.at("J") == "9");
  CHECK(json.at("I2term") == "3");
  CHECK(json.at("germ") == "D4-");
  CHECK(json.at("type") == "A1^2");
  for (const auto& [key, value] : json.items()) CHECK(value.is_string());

  const AdjacencyReport back = report_from_json(json);
  CHECK(back == report);
  CHECK(render_report(back, OutputFormat::Json) == json_text);
}

TEST_CASE("JSON round-trip for a large germ") {
  for (const auto& entry : build_table(DGerm(30, 1), false, 0)) {
    const std::string text = render_report(entry.report, OutputFormat::Json);
    CHECK(render_report(report_from_json(nlohmann::json::parse(text)), OutputFormat::Json) ==
          text);
  }
}

TEST_CASE("report_from_json rejects inconsistent input") {
  auto json = report_to_json(adjacency_index(DGerm(5, 1), parse_type("A1")));
  json["codim"] = "7";
  CHECK_THROWS(report_from_json(json));
  json = report_to_json(adjacency_index(DGerm(5, 1), parse_type("A1")));
  json["type"] = "D4";
  CHECK_THROWS_AS(report_from_json(json), ParseError);
}

TEST_CASE("table formats carry identical numbers") {
  const DGerm germ(6, -1);
  const auto table = build_table(germ, false, 1);

  const std::string csv = render_table(germ, table, OutputFormat::Csv);
  const auto lines = split(csv, '\n');
  REQUIRE(lines.size() == table.size() + 1);
  CHECK(lines[0] == "type,codim,J,I0,I1,I2term,I3term,N");

  const auto json = nlohmann::json::parse(render_table(germ, table, OutputFormat::Json));
  CHECK(json.at("germ") == "D6-");
  REQUIRE(json.at("rows").size() == table.size());

  const auto md_lines = split(render_table(germ, table, OutputFormat::Markdown), '\n');
  // Title, blank line, header, rule.
  REQUIRE(md_lines.size() == table.size() + 4);

  const std::vector<std::string> columns = {"type", "codim", "J",      "I0",
                                            "I1",   "I2term", "I3term", "N"};
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto csv_cells = split(lines[r + 1], ',');
    auto md_cells = split(md_lines[r + 4], '|');
    md_cells.erase(md_cells.begin());  // leading empty cell
    REQUIRE(csv_cells.size() == columns.size());
    REQUIRE(md_cells.size() == columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      CHECK(csv_cells[c] == json["rows"][r].at(columns[c]).get<std::string>());
      CHECK(trim(md_cells[c]) == csv_cells[c]);
    }
  }
  bool has_a1 = false;
  for (const auto& line : lines) has_a1 = has_a1 || line.rfind("A1,2,34,", 0) == 0;
  CHECK(has_a1);
}

TEST_CASE("report formats carry identical numbers") {
  const auto report = adjacency_index(DGerm(7, 1), parse_type("A1 A2"));
  const auto csv = split(render_report(report, OutputFormat::Csv), '\n');
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == kReportCsvHeader);
  const auto header = split(csv[0], ',');
  const auto values = split(csv[1], ',');
  REQUIRE(header.size() == values.size());

  const auto json = nlohmann::json::parse(render_report(report, OutputFormat::Json));
  std::map<std::string, std::string> md;
  for (const auto& line : split(render_report(report, OutputFormat::Markdown), '\n')) {
    auto cells = split(line, '|');
    if (cells.size() == 3) md[trim(cells[1])] = trim(cells[2]);
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    CHECK(json.at(header[c]).get<std::string>() == values[c]);
    if (header[c] != "germ" && header[c] != "type") CHECK(md.at(header[c]) == values[c]);
  }
}

TEST_CASE("tables are byte-identical across runs") {
  const DGerm germ(12, 1);
  const auto a = render_table(germ, build_table(germ, false, 1), OutputFormat::Json);
  const auto b = render_table(germ, build_table(germ, false, 4), OutputFormat::Json);
  CHECK(a == b);
}

TEST_CASE("verify and closed-form drivers") {
  VerifyOptions options;
  options.max_mu = 5;
  const auto summary = run_verify(options);
  CHECK(summary.ok());
  CHECK(summary.checks > 0);
  CHECK(summary.passed == summary.checks);

  const auto closed = run_closed_forms(6);
  CHECK(closed.ok());
  CHECK(closed.checks == 2 * 3 * 5);

  options.cap = 3;
  CHECK_THROWS_AS(run_verify(options), oracle::CapExceeded);
  options.max_mu = 3;
  CHECK_THROWS_AS(run_verify(options), std::invalid_argument);
  CHECK_THROWS_AS(run_closed_forms(1), std::invalid_argument);
}

TEST_CASE("summary rendering lists failures") {
  VerifySummary summary;
  summary.record(true, {});
  summary.record(false, {"oracle", "D4+", "A1", "4", "5"});
  CHECK_FALSE(summary.ok());
  const auto json = nlohmann::json::parse(render_summary("verify", summary, OutputFormat::Json));
  CHECK(json.at("failed") == "1");
  CHECK(json.at("failures")[0].at("actual") == "5");
  const auto md = render_summary("verify", summary, OutputFormat::Markdown);
  CHECK(md.find("| oracle | D4+ | A1 | 4 | 5 |") != std::string::npos);
}
