#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "legadj/oracle.hpp"
#include "legadj/render.hpp"

namespace legadj {

struct VerifyFailure {
  std::string check;  // "oracle", "dual-path", "closed-form-A1", ...
  std::string germ;
  std::string type;
  std::string expected;
  std::string actual;
};

struct VerifySummary {
  std::uint64_t checks = 0;
  std::uint64_t passed = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
  void record(bool pass, VerifyFailure failure);
};

struct VerifyOptions {
  int max_mu = 9;
  std::uint64_t cap = oracle::kDefaultWordCap;
  unsigned threads = 0;
};

/*!
  For every 4 <= mu <= max_mu, both signs, and every catalog candidate:
  oracle equality, dual-path agreement, the A1 and trivial closed forms, and
  sign invariance for odd mu.

  The word cap applies per (germ, type) oracle call. Throws
  oracle::CapExceeded if any call exceeds it.
*/
VerifySummary run_verify(const VerifyOptions& options);

/// Checks the A1 and trivial closed forms against the full evaluation for
/// k = 2..max_k (mu = 2k with both signs, and mu = 2k + 1).
VerifySummary run_closed_forms(int max_k, unsigned threads = 0);

std::string render_summary(const std::string& title, const VerifySummary& summary,
                           OutputFormat format);

}  // namespace legadj
