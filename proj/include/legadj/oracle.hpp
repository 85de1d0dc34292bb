#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legadj/sing_algebra.hpp"

namespace legadj::oracle {

using Count = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultWordCap = 100'000'000;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind : std::uint8_t { Simple, OddRoot, EvenRoot, ZeroMarker };

// What sits at t2 = 0.
enum class MarkerKind : std::uint8_t {
  NonRootPoint,        // zero is not a root; polynomial negative there
  SimpleRoot,          // a designated simple root standing at zero
  PositiveDoubleRoot,  // even root in a positive interval
  NegativeDoubleRoot,  // even root in a negative interval
  TripleRoot,          // odd root of multiplicity 3
};

/// One letter of an arrangement word. `index` is the A-index of the root
/// (alpha for OddRoot, beta for EvenRoot) and 0 otherwise.
struct Symbol {
  SymbolKind kind = SymbolKind::Simple;
  int index = 0;
  MarkerKind marker = MarkerKind::NonRootPoint;

  static Symbol simple() { return {SymbolKind::Simple, 0, MarkerKind::NonRootPoint}; }
  static Symbol odd_root(int alpha) { return {SymbolKind::OddRoot, alpha, MarkerKind::NonRootPoint}; }
  static Symbol even_root(int beta) { return {SymbolKind::EvenRoot, beta, MarkerKind::NonRootPoint}; }
  static Symbol zero(MarkerKind kind) { return {SymbolKind::ZeroMarker, 0, kind}; }

  bool flips_sign() const noexcept {
    return kind == SymbolKind::Simple || kind == SymbolKind::OddRoot;
  }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Left-to-right order of the real roots and of zero on the t2-axis.
struct Arrangement {
  std::vector<Symbol> word;
};

enum class Stratum { C0, C1, I1, Pi2, Pi3 };

/// Counts words as they are generated and throws CapExceeded past the cap.
class WordBudget {
 public:
  explicit WordBudget(std::uint64_t cap = kDefaultWordCap) : cap_(cap) {}

  void charge() {
    if (++used_ > cap_) throw CapExceeded("enumeration cap of " + std::to_string(cap_) +
                                          " words exceeded");
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

/// Sign (+1 / -1) of the interval containing the zero marker, found by
/// walking leftwards from the rightmost interval, whose sign is delta.
/// Throws std::invalid_argument when the word has no marker.
int interval_sign_at_marker(const Arrangement& arrangement, int delta);

/// Sorted multiset of symbols for one summation level: i0 simple roots plus
/// the roots of `type` plus one marker. For C1 one of the i0 simple roots is
/// the marker itself, so i0 must be >= 1.
std::vector<Symbol> level_multiset(const MultisingularityType& type, int i0, MarkerKind marker);

/// Count of admissible words for a single i0 value of a stratum.
Count enumerate_level(int mu, int delta, const MultisingularityType& type, Stratum stratum,
                      int i0, WordBudget& budget);

/// Count of admissible words summed over the stratum's i0 range.
Count enumerate_stratum(int mu, int delta, const MultisingularityType& type, Stratum stratum,
                        WordBudget& budget);
Count enumerate_stratum(const DGerm& germ, const MultisingularityType& type, Stratum stratum,
                        WordBudget& budget);

struct StratumCounts {
  Count c0;
  Count c1;
  Count i1;
  Count pi2;
  Count pi3;
};

StratumCounts enumerate_all(int mu, int delta, const MultisingularityType& type,
                            WordBudget& budget);

/// (2 C0 - C1) + I1 + Pi2 + Pi3, computed only from word enumeration.
Count oracle_adjacency_index(int mu, int delta, const MultisingularityType& type,
                             std::uint64_t cap = kDefaultWordCap);
Count oracle_adjacency_index(const DGerm& germ, const MultisingularityType& type,
                             std::uint64_t cap = kDefaultWordCap);

}  // namespace legadj::oracle
