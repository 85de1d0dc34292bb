// legadj: adjacency indices of D_mu germs to A-multisingularities.

#include <unistd.h>

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "legadj/adjacency.hpp"
#include "legadj/catalog.hpp"
#include "legadj/oracle.hpp"
#include "legadj/render.hpp"
#include "legadj/verify.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kDualPathMismatch = 3,
  kCapExceeded = 4,
};

}  // namespace

int main(int argc, char** argv) {
  using namespace legadj;

  CLI::App app{"Adjacency indices of Legendrian D_mu germs to A-type multisingularities"};
  app.require_subcommand(1);

  std::string format_text;
  bool quiet = false;
  unsigned threads = 0;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_flag("--quiet", quiet, "Suppress progress and diagnostics on stderr");
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  std::string germ_text;
  std::string type_text;
  auto* compute = app.add_subcommand("compute", "Adjacency index J_A(D) with full breakdown");
  compute->add_option("germ", germ_text, "Germ, e.g. D4+, D4-, D5")->required();
  compute->add_option("type", type_text, "Type, e.g. \"A1^2 A3\" or 1")->required();

  bool include_zero = false;
  auto* table = app.add_subcommand("table", "Adjacency table over all candidate types");
  table->add_option("germ", germ_text, "Germ, e.g. D4+, D4-, D5")->required();
  table->add_flag("--include-zero", include_zero, "Keep rows with J = 0");

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Cross-check formula against the enumeration oracle");
  verify->add_option("--max-mu", verify_options.max_mu, "Largest mu to check")
      ->check(CLI::Range(4, 64));
  verify->add_option("--cap", verify_options.cap, "Word cap per oracle call")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));

  int max_k = 12;
  auto* closed = app.add_subcommand("closed-forms", "Check the A1 and trivial closed forms");
  closed->add_option("--max-k", max_k, "Largest k (mu = 2k, 2k + 1)")->check(CLI::Range(2, 500));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const OutputFormat format = format_text.empty()
                                  ? (isatty(STDOUT_FILENO) ? OutputFormat::Markdown
                                                           : OutputFormat::Json)
                                  : parse_format(format_text);
  verify_options.threads = threads;

  try {
    if (*compute) {
      const DGerm germ = parse_germ(germ_text);
      const MultisingularityType type = parse_type(type_text);
      std::cout << render_report(adjacency_index(germ, type), format);
      return kOk;
    }
    if (*table) {
      const DGerm germ = parse_germ(germ_text);
      std::cout << render_table(germ, build_table(germ, include_zero, threads), format);
      return kOk;
    }
    if (*verify) {
      if (!quiet) {
        std::cerr << "verifying mu = 4.." << verify_options.max_mu << " (cap "
                  << verify_options.cap << " words per oracle call)\n";
      }
      const VerifySummary summary = run_verify(verify_options);
      std::cout << render_summary("verify", summary, format);
      return summary.ok() ? kOk : kVerificationFailure;
    }
    if (*closed) {
      const VerifySummary summary = run_closed_forms(max_k, threads);
      std::cout << render_summary("closed-forms", summary, format);
      return summary.ok() ? kOk : kVerificationFailure;
    }
  } catch (const ParseError& e) {
    if (!quiet) std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DualPathMismatch& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDualPathMismatch;
  } catch (const IntegralityError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDualPathMismatch;
  } catch (const oracle::CapExceeded& e) {
    if (!quiet) std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  }
  return kUsageError;
}
