#include "legadj/oracle.hpp"

#include <algorithm>

namespace legadj::oracle {

namespace {

struct StratumRule {
  MultisingularityType type;  // roots other than zero and the simple roots
  int upper = -1;             // i0 <= upper
  int parity = 0;             // i0 = parity (mod 2)
  MarkerKind marker = MarkerKind::NonRootPoint;
  int required_sign = 0;      // 0: no constraint
};

int mod2(int value) { return ((value % 2) + 2) % 2; }

void check_germ(int mu, int delta) {
  if (mu < 4) throw std::invalid_argument("D-germ index must be >= 4");
  if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +1 or -1");
}

// Returns false when the stratum is empty for this type (division fails).
bool rule_for(int mu, const MultisingularityType& type, Stratum stratum, StratumRule& rule) {
  const int n = mu - type.codim();
  rule.type = type;
  switch (stratum) {
    case Stratum::C0:
      rule.upper = n;
      rule.parity = mod2(n);
      rule.marker = MarkerKind::NonRootPoint;
      rule.required_sign = -1;
      return true;
    case Stratum::C1:
      rule.upper = n;
      rule.parity = mod2(n);
      rule.marker = MarkerKind::SimpleRoot;
      return true;
    case Stratum::I1:
      rule.upper = n - 2;
      rule.parity = mod2(n);
      rule.marker = MarkerKind::PositiveDoubleRoot;
      rule.required_sign = +1;
      return true;
    case Stratum::Pi2: {
      auto reduced = divide(type, MultisingularityType::single(1, 2));
      if (!reduced) return false;
      rule.type = *reduced;
      rule.upper = n + 2;
      rule.parity = mod2(n);
      rule.marker = MarkerKind::NegativeDoubleRoot;
      rule.required_sign = -1;
      return true;
    }
    case Stratum::Pi3: {
      auto reduced = divide(type, MultisingularityType::single(3));
      if (!reduced) return false;
      rule.type = *reduced;
      rule.upper = n + 1;
      rule.parity = mod2(n + 1);
      rule.marker = MarkerKind::TripleRoot;
      return true;
    }
  }
  return false;
}

int sign_at_marker(const std::vector<Symbol>& word, int delta) {
  int sign = delta;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == SymbolKind::ZeroMarker) return sign;
    if (it->flips_sign()) sign = -sign;
  }
  throw std::invalid_argument("arrangement has no zero marker");
}

Count count_level(const StratumRule& rule, int delta, int i0, WordBudget& budget) {
  if (i0 < 0 || i0 > rule.upper || mod2(i0) != rule.parity) return 0;
  if (rule.marker == MarkerKind::SimpleRoot && i0 == 0) return 0;

  std::vector<Symbol> word = level_multiset(rule.type, i0, rule.marker);
  std::uint64_t admissible = 0;
  do {
    budget.charge();
    if (rule.required_sign == 0 || sign_at_marker(word, delta) == rule.required_sign) {
      ++admissible;
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return Count(admissible);
}

}  // namespace

int interval_sign_at_marker(const Arrangement& arrangement, int delta) {
  return sign_at_marker(arrangement.word, delta);
}

std::vector<Symbol> level_multiset(const MultisingularityType& type, int i0, MarkerKind marker) {
  std::vector<Symbol> symbols;
  const int simple_count = marker == MarkerKind::SimpleRoot ? i0 - 1 : i0;
  if (simple_count < 0) throw std::invalid_argument("SimpleRoot marker needs i0 >= 1");
  symbols.insert(symbols.end(), simple_count, Symbol::simple());
  for (const auto& [index, exponent] : type.exponents()) {
    const Symbol root = index % 2 == 0 ? Symbol::odd_root(index) : Symbol::even_root(index);
    symbols.insert(symbols.end(), exponent, root);
  }
  symbols.push_back(Symbol::zero(marker));
  std::sort(symbols.begin(), symbols.end());
  return symbols;
}

Count enumerate_level(int mu, int delta, const MultisingularityType& type, Stratum stratum,
                      int i0, WordBudget& budget) {
  check_germ(mu, delta);
  StratumRule rule;
  if (!rule_for(mu, type, stratum, rule)) return 0;
  return count_level(rule, delta, i0, budget);
}

Count enumerate_stratum(int mu, int delta, const MultisingularityType& type, Stratum stratum,
                        WordBudget& budget) {
  check_germ(mu, delta);
  StratumRule rule;
  if (!rule_for(mu, type, stratum, rule)) return 0;
  Count total = 0;
  for (int i0 = rule.parity; i0 <= rule.upper; i0 += 2) {
    total += count_level(rule, delta, i0, budget);
  }
  return total;
}

Count enumerate_stratum(const DGerm& germ, const MultisingularityType& type, Stratum stratum,
                        WordBudget& budget) {
  return enumerate_stratum(germ.mu(), germ.delta(), type, stratum, budget);
}

StratumCounts enumerate_all(int mu, int delta, const MultisingularityType& type,
                            WordBudget& budget) {
  StratumCounts counts;
  counts.c0 = enumerate_stratum(mu, delta, type, Stratum::C0, budget);
  counts.c1 = enumerate_stratum(mu, delta, type, Stratum::C1, budget);
  counts.i1 = enumerate_stratum(mu, delta, type, Stratum::I1, budget);
  counts.pi2 = enumerate_stratum(mu, delta, type, Stratum::Pi2, budget);
  counts.pi3 = enumerate_stratum(mu, delta, type, Stratum::Pi3, budget);
  return counts;
}

Count oracle_adjacency_index(int mu, int delta, const MultisingularityType& type,
                             std::uint64_t cap) {
  WordBudget budget(cap);
  const StratumCounts counts = enumerate_all(mu, delta, type, budget);
  return counts.c0 + counts.c0 - counts.c1 + counts.i1 + counts.pi2 + counts.pi3;
}

Count oracle_adjacency_index(const DGerm& germ, const MultisingularityType& type,
                             std::uint64_t cap) {
  return oracle_adjacency_index(germ.mu(), germ.delta(), type, cap);
}

}  // namespace legadj::oracle
