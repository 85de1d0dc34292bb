#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legadj/sing_algebra.hpp"

namespace legadj {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// The rational evaluation produced a non-integral (or negative) quantity that
/// must be a count. Always an implementation bug.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The rational and integer evaluations disagree. Always an implementation bug.
class DualPathMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Terms of the published formula J = I0 + I1 + a1(a1-1) I2 + a3 I3.
struct FormulaTerms {
  ExactInteger i0;
  ExactInteger i1;
  ExactInteger i2_term;  // a1(a1-1) * I2
  ExactInteger i3_term;  // a3 * I3

  friend bool operator==(const FormulaTerms&, const FormulaTerms&) = default;
};

/// Stratum counts from the integer (root-placement) evaluation.
struct StratumTerms {
  ExactInteger c0;
  ExactInteger c1;
  ExactInteger i1;
  ExactInteger pi2_count;
  ExactInteger pi3_count;

  friend bool operator==(const StratumTerms&, const StratumTerms&) = default;
};

struct AdjacencyReport {
  DGerm germ{4, 1};
  MultisingularityType type;
  // Sign used for the evaluation. Differs from germ.delta() only when an odd
  // germ is deliberately evaluated with delta = -1.
  int evaluated_delta = 1;
  int n = 0;
  ExactInteger j;
  ExactInteger i0;
  ExactInteger i1;
  ExactInteger i2_term;
  ExactInteger i3_term;
  ExactInteger c0;
  ExactInteger c1;
  ExactInteger pi2_count;
  ExactInteger pi3_count;

  friend bool operator==(const AdjacencyReport&, const AdjacencyReport&) = default;
};

/// (sum parts)! / prod(parts!). Throws std::invalid_argument on a negative part.
ExactInteger multinomial(std::span<const int> parts);
ExactInteger multinomial(std::initializer_list<int> parts);

/// Number of negative intervals cut out by i0 + m1 odd-multiplicity roots when
/// the rightmost interval has sign delta.
int delta_count(int delta, int i0, int m1);

/// N = mu - codim(type). May be negative.
int budget(const DGerm& germ, const MultisingularityType& type);

FormulaTerms compute_terms_rational(int mu, int delta, const MultisingularityType& type);
FormulaTerms compute_terms_rational(const DGerm& germ, const MultisingularityType& type);

StratumTerms compute_terms_integer(int mu, int delta, const MultisingularityType& type);
StratumTerms compute_terms_integer(const DGerm& germ, const MultisingularityType& type);

/// Runs both evaluations, cross-checks them, and returns the full breakdown.
/// Throws DualPathMismatch if they disagree.
AdjacencyReport adjacency_index(const DGerm& germ, const MultisingularityType& type);

/// Same as above but with an explicit sign, which lets odd mu be evaluated
/// with delta = -1. mu must be >= 4.
AdjacencyReport adjacency_index(int mu, int delta, const MultisingularityType& type);

/// Closed form for the number of A1 pieces near D_mu.
ExactInteger closed_form_A1(const DGerm& germ);

/// Closed form for the number of complement components near D_mu.
ExactInteger closed_form_trivial(const DGerm& germ);

std::string describe(const FormulaTerms& terms);
std::string describe(const StratumTerms& terms);

}  // namespace legadj
