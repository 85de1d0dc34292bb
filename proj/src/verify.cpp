#include "legadj/verify.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "legadj/catalog.hpp"
#include "legadj/parallel.hpp"

namespace legadj {

namespace {

std::string germ_label(int mu, int delta) {
  return "D" + std::to_string(mu) + (delta > 0 ? "+" : "-");
}

struct CandidateResult {
  std::optional<AdjacencyReport> report;
  std::string mismatch;
  oracle::Count oracle_j;
};

const AdjacencyReport* find_report(const std::vector<MultisingularityType>& types,
                                   const std::vector<CandidateResult>& results,
                                   const MultisingularityType& wanted) {
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (types[i] == wanted && results[i].report) return &*results[i].report;
  }
  return nullptr;
}

void check_closed_forms(VerifySummary& summary, int mu, int delta, const ExactInteger& j_a1,
                        const ExactInteger& j_trivial) {
  const DGerm germ(mu, delta);
  const ExactInteger a1 = closed_form_A1(germ);
  const ExactInteger trivial = closed_form_trivial(germ);
  summary.record(j_a1 == a1, {"closed-form-A1", germ_label(mu, delta), "A1", a1.str(), j_a1.str()});
  summary.record(j_trivial == trivial,
                 {"closed-form-1", germ_label(mu, delta), "1", trivial.str(), j_trivial.str()});
}

}  // namespace

void VerifySummary::record(bool pass, VerifyFailure failure) {
  ++checks;
  if (pass) {
    ++passed;
  } else {
    failures.push_back(std::move(failure));
  }
}

VerifySummary run_verify(const VerifyOptions& options) {
  if (options.max_mu < 4) throw std::invalid_argument("max_mu must be >= 4");
  if (options.cap == 0) throw std::invalid_argument("cap must be positive");

  VerifySummary summary;
  const MultisingularityType a1 = MultisingularityType::single(1);
  const MultisingularityType trivial;

  for (int mu = 4; mu <= options.max_mu; ++mu) {
    const auto types = enumerate_candidate_types(mu);
    std::array<std::vector<CandidateResult>, 2> by_sign;

    for (int s = 0; s < 2; ++s) {
      const int delta = s == 0 ? 1 : -1;
      by_sign[s] = parallel_map<CandidateResult>(
          types.size(), options.threads, [&](std::size_t i) {
            CandidateResult result;
            try {
              result.report = adjacency_index(mu, delta, types[i]);
            } catch (const DualPathMismatch& e) {
              result.mismatch = e.what();
            }
            result.oracle_j = oracle::oracle_adjacency_index(mu, delta, types[i], options.cap);
            return result;
          });

      const auto& results = by_sign[s];
      for (std::size_t i = 0; i < types.size(); ++i) {
        const std::string type = format_type(types[i]);
        const auto& r = results[i];
        summary.record(r.report.has_value(),
                       {"dual-path", germ_label(mu, delta), type, "agreement", r.mismatch});
        const std::string actual = r.report ? r.report->j.str() : "n/a";
        summary.record(r.report && r.report->j == r.oracle_j,
                       {"oracle", germ_label(mu, delta), type, r.oracle_j.str(), actual});
      }

      const AdjacencyReport* a1_report = find_report(types, results, a1);
      const AdjacencyReport* trivial_report = find_report(types, results, trivial);
      if (a1_report && trivial_report) {
        check_closed_forms(summary, mu, delta, a1_report->j, trivial_report->j);
      } else {
        summary.record(false, {"closed-form", germ_label(mu, delta), "A1 / 1", "report", "missing"});
      }
    }

    if (mu % 2 != 0) {
      for (std::size_t i = 0; i < types.size(); ++i) {
        const auto& plus = by_sign[0][i].report;
        const auto& minus = by_sign[1][i].report;
        const bool same = plus && minus && plus->j == minus->j;
        summary.record(same, {"odd-sign-invariance", "D" + std::to_string(mu),
                              format_type(types[i]), plus ? plus->j.str() : "n/a",
                              minus ? minus->j.str() : "n/a"});
      }
    }
  }
  return summary;
}

VerifySummary run_closed_forms(int max_k, unsigned threads) {
  if (max_k < 2) throw std::invalid_argument("max_k must be >= 2");
  struct Case {
    int mu;
    int delta;
  };
  std::vector<Case> cases;
  for (int k = 2; k <= max_k; ++k) {
    cases.push_back({2 * k, 1});
    cases.push_back({2 * k, -1});
    cases.push_back({2 * k + 1, 1});
  }

  struct Values {
    ExactInteger a1;
    ExactInteger trivial;
  };
  const auto values = parallel_map<Values>(cases.size(), threads, [&](std::size_t i) {
    const DGerm germ(cases[i].mu, cases[i].delta);
    return Values{adjacency_index(germ, MultisingularityType::single(1)).j,
                  adjacency_index(germ, MultisingularityType{}).j};
  });

  VerifySummary summary;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    check_closed_forms(summary, cases[i].mu, cases[i].delta, values[i].a1, values[i].trivial);
  }
  return summary;
}

std::string render_summary(const std::string& title, const VerifySummary& summary,
                           OutputFormat format) {
  const std::uint64_t failed = summary.checks - summary.passed;
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& f : summary.failures) {
        failures.push_back({{"check", f.check},
                            {"germ", f.germ},
                            {"type", f.type},
                            {"expected", f.expected},
                            {"actual", f.actual}});
      }
      nlohmann::json json = {{"title", title},
                             {"checks", std::to_string(summary.checks)},
                             {"passed", std::to_string(summary.passed)},
                             {"failed", std::to_string(failed)},
                             {"failures", std::move(failures)}};
      return json.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      out << "check,germ,type,expected,actual\n";
      for (const auto& f : summary.failures) {
        out << f.check << ',' << f.germ << ',' << f.type << ",\"" << f.expected << "\",\""
            << f.actual << "\"\n";
      }
      out << "summary,,," << summary.passed << ',' << failed << "\n";
      return out.str();
    case OutputFormat::Markdown:
      out << "## " << title << "\n\n"
          << "checks: " << summary.checks << ", passed: " << summary.passed
          << ", failed: " << failed << "\n";
      if (!summary.failures.empty()) {
        out << "\n| check | germ | type | expected | actual |\n|---|---|---|---|---|\n";
        for (const auto& f : summary.failures) {
          out << "| " << f.check << " | " << f.germ << " | " << f.type << " | " << f.expected
              << " | " << f.actual << " |\n";
        }
      }
      return out.str();
  }
  return {};
}

}  // namespace legadj
