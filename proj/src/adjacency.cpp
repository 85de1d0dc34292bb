#include "legadj/adjacency.hpp"

#include <sstream>

namespace legadj {

namespace {

// Parity-restricted summation range: 0 <= i0 <= upper, i0 = parity (mod 2).
// Empty when upper < 0.
template <typename Fn>
void for_each_i0(int upper, int parity, Fn&& fn) {
  int start = ((parity % 2) + 2) % 2;
  for (int i0 = start; i0 <= upper; i0 += 2) fn(i0);
}

std::vector<int> parts_with(int head, const std::vector<std::pair<int, int>>& tail) {
  std::vector<int> parts;
  parts.reserve(tail.size() + 1);
  parts.push_back(head);
  for (const auto& entry : tail) parts.push_back(entry.second);
  return parts;
}

// <i0, i_1..i_k>
ExactInteger odd_arrangements(int i0, const Profile& p) {
  return multinomial(parts_with(i0, p.even_part));
}

// <1 + i0 + m1, j_1..j_l>
ExactInteger even_placements(int i0, const Profile& p) {
  return multinomial(parts_with(1 + i0 + p.m1, p.odd_part));
}

// <i0, i_1..i_k, j_1..j_l>
ExactInteger full_multinomial(int i0, const Profile& p) {
  std::vector<int> parts = parts_with(i0, p.even_part);
  for (const auto& entry : p.odd_part) parts.push_back(entry.second);
  return multinomial(parts);
}

ExactInteger require_count(const ExactRational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw IntegralityError(std::string(what) + " is not an integer: " + value.str());
  }
  if (value < 0) throw IntegralityError(std::string(what) + " is negative: " + value.str());
  return boost::multiprecision::numerator(value);
}

void check_mu(int mu) {
  if (mu < 4) throw std::invalid_argument("D-germ index must be >= 4");
}

}  // namespace

ExactInteger multinomial(std::span<const int> parts) {
  // Product of binomials C(n_1 + ... + n_s, n_s), built one factor at a time;
  // every intermediate quotient is exact.
  ExactInteger result = 1;
  long total = 0;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial: negative part");
    for (int i = 1; i <= part; ++i) {
      ++total;
      result *= total;
      result /= i;
    }
  }
  return result;
}

ExactInteger multinomial(std::initializer_list<int> parts) {
  return multinomial(std::span<const int>(parts.begin(), parts.size()));
}

int delta_count(int delta, int i0, int m1) {
  if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +1 or -1");
  if (i0 < 0 || m1 < 0) throw std::invalid_argument("delta_count: negative argument");
  return (3 - delta + 2 * (i0 + m1)) / 4;
}

int budget(const DGerm& germ, const MultisingularityType& type) {
  return germ.mu() - type.codim();
}

FormulaTerms compute_terms_rational(int mu, int delta, const MultisingularityType& type) {
  check_mu(mu);
  const Profile p = profile_of(type);
  const int n = mu - p.codim;
  FormulaTerms terms;

  // (1 + i0 + m1 + m2) / (1 + i0 + m1)
  auto ratio = [&](int i0) {
    return ExactRational(1 + i0 + p.m1 + p.m2, 1 + i0 + p.m1);
  };

  for_each_i0(n, n, [&](int i0) {
    const int d = delta_count(delta, i0, p.m1);
    ExactRational summand = ExactRational(full_multinomial(i0, p)) *
                            (ExactRational(2 * d) * ratio(i0) - i0);
    terms.i0 += require_count(summand, "I0 summand");
  });

  for_each_i0(n - 2, n, [&](int i0) {
    const int d = delta_count(delta, i0, p.m1);
    ExactRational summand =
        ExactRational(full_multinomial(i0, p)) * ratio(i0) * (1 + i0 + p.m1 - d);
    terms.i1 += require_count(summand, "I1 summand");
  });

  if (p.a1 >= 2) {
    ExactRational i2 = 0;
    for_each_i0(n + 2, n, [&](int i0) {
      const int d = delta_count(delta, i0, p.m1);
      i2 += ExactRational(full_multinomial(i0, p) * d,
                          ExactInteger(1 + i0 + p.m1) * (i0 + p.m1 + p.m2));
    });
    terms.i2_term = require_count(i2 * (p.a1 * (p.a1 - 1)), "a1(a1-1) I2");
  }

  if (p.a3 >= 1) {
    ExactInteger i3 = 0;
    for_each_i0(n + 1, n + 1, [&](int i0) { i3 += full_multinomial(i0, p); });
    terms.i3_term = i3 * p.a3;
  }
  return terms;
}

FormulaTerms compute_terms_rational(const DGerm& germ, const MultisingularityType& type) {
  return compute_terms_rational(germ.mu(), germ.delta(), type);
}

StratumTerms compute_terms_integer(int mu, int delta, const MultisingularityType& type) {
  check_mu(mu);
  const Profile p = profile_of(type);
  const int n = mu - p.codim;
  StratumTerms terms;

  for_each_i0(n, n, [&](int i0) {
    const int d = delta_count(delta, i0, p.m1);
    terms.c0 += odd_arrangements(i0, p) * even_placements(i0, p) * d;
    terms.c1 += full_multinomial(i0, p) * i0;
  });

  for_each_i0(n - 2, n, [&](int i0) {
    const int d = delta_count(delta, i0, p.m1);
    terms.i1 += odd_arrangements(i0, p) * even_placements(i0, p) * (1 + i0 + p.m1 - d);
  });

  // Zero is a double root in a negative interval; the remaining roots form
  // the type divided by A1^2.
  if (auto reduced = divide(type, MultisingularityType::single(1, 2))) {
    const Profile r = profile_of(*reduced);
    for_each_i0(n + 2, n, [&](int i0) {
      terms.pi2_count += odd_arrangements(i0, r) * even_placements(i0, r) *
                         delta_count(delta, i0, r.m1);
    });
  }

  // Zero is a triple root: one extra odd-multiplicity symbol, no sign condition.
  if (auto reduced = divide(type, MultisingularityType::single(3))) {
    const Profile r = profile_of(*reduced);
    for_each_i0(n + 1, n + 1, [&](int i0) {
      std::vector<int> parts = parts_with(i0, r.even_part);
      for (const auto& entry : r.odd_part) parts.push_back(entry.second);
      parts.push_back(1);
      terms.pi3_count += multinomial(parts);
    });
  }
  return terms;
}

StratumTerms compute_terms_integer(const DGerm& germ, const MultisingularityType& type) {
  return compute_terms_integer(germ.mu(), germ.delta(), type);
}

AdjacencyReport adjacency_index(int mu, int delta, const MultisingularityType& type) {
  const FormulaTerms formula = compute_terms_rational(mu, delta, type);
  const StratumTerms strata = compute_terms_integer(mu, delta, type);

  const bool agree = formula.i0 == 2 * strata.c0 - strata.c1 && formula.i1 == strata.i1 &&
                     formula.i2_term == strata.pi2_count &&
                     formula.i3_term == strata.pi3_count;
  if (!agree) {
    std::ostringstream msg;
    msg << "dual-path mismatch for D" << mu << (delta > 0 ? "+" : "-") << " / "
        << format_type(type) << ": formula " << describe(formula) << " vs strata "
        << describe(strata);
    throw DualPathMismatch(msg.str());
  }

  AdjacencyReport report;
  report.germ = DGerm(mu, delta);
  report.type = type;
  report.evaluated_delta = delta;
  report.n = mu - type.codim();
  report.i0 = formula.i0;
  report.i1 = strata.i1;
  report.i2_term = strata.pi2_count;
  report.i3_term = strata.pi3_count;
  report.c0 = strata.c0;
  report.c1 = strata.c1;
  report.pi2_count = strata.pi2_count;
  report.pi3_count = strata.pi3_count;
  report.j = report.i0 + report.i1 + report.i2_term + report.i3_term;
  return report;
}

AdjacencyReport adjacency_index(const DGerm& germ, const MultisingularityType& type) {
  return adjacency_index(germ.mu(), germ.delta(), type);
}

ExactInteger closed_form_A1(const DGerm& germ) {
  const ExactInteger k = germ.mu() / 2;
  if (germ.is_odd()) return k * (k + 1) * (4 * k + 5) / 6 + k;
  const int sign_floor = (3 - germ.delta()) / 4;
  return 2 * k * (k * k - 1) / 3 + k * (k + 3) * sign_floor;
}

ExactInteger closed_form_trivial(const DGerm& germ) {
  const ExactInteger k = germ.mu() / 2;
  if (germ.is_odd()) return (k + 1) * (k + 2) / 2;
  const int sign_floor = (3 - germ.delta()) / 4;
  return k * (k + 1) / 2 + (k + 2) * sign_floor;
}

std::string describe(const FormulaTerms& terms) {
  std::ostringstream out;
  out << "{I0=" << terms.i0 << ", I1=" << terms.i1 << ", I2term=" << terms.i2_term
      << ", I3term=" << terms.i3_term << "}";
  return out.str();
}

std::string describe(const StratumTerms& terms) {
  std::ostringstream out;
  out << "{C0=" << terms.c0 << ", C1=" << terms.c1 << ", I1=" << terms.i1
      << ", pi2=" << terms.pi2_count << ", pi3=" << terms.pi3_count << "}";
  return out.str();
}

}  // namespace legadj
