#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "legadj/adjacency.hpp"
#include "legadj/catalog.hpp"
#include "legadj/oracle.hpp"

using namespace legadj;
using namespace legadj::oracle;

namespace {

MultisingularityType type(const char* text) { return parse_type(text); }

Arrangement word(std::initializer_list<Symbol> symbols) { return {std::vector<Symbol>(symbols)}; }

// Distinct words reached by permuting a labelled copy of the multiset and
// collapsing labels; independent of next_permutation's duplicate handling.
std::set<std::vector<Symbol>> distinct_words_by_labels(const std::vector<Symbol>& multiset) {
  std::vector<std::size_t> labels(multiset.size());
  std::iota(labels.begin(), labels.end(), 0);
  std::set<std::vector<Symbol>> words;
  do {
    std::vector<Symbol> w;
    for (std::size_t label : labels) w.push_back(multiset[label]);
    words.insert(w);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return words;
}

}  // namespace

TEST_CASE("interval_sign_at_marker") {
  const Symbol zero = Symbol::zero(MarkerKind::NonRootPoint);
  CHECK(interval_sign_at_marker(word({zero}), -1) == -1);
  CHECK(interval_sign_at_marker(word({zero, Symbol::simple()}), 1) == -1);
  CHECK(interval_sign_at_marker(word({Symbol::simple(), zero, Symbol::simple()}), 1) == -1);
  // Even roots never flip; odd-multiplicity roots do.
  CHECK(interval_sign_at_marker(word({zero, Symbol::even_root(1)}), 1) == 1);
  CHECK(interval_sign_at_marker(word({zero, Symbol::odd_root(2)}), 1) == -1);
  CHECK(interval_sign_at_marker(word({zero, Symbol::odd_root(2), Symbol::simple()}), -1) == -1);
  CHECK_THROWS_AS(interval_sign_at_marker(word({Symbol::simple()}), 1), std::invalid_argument);
}

TEST_CASE("enumerate_stratum frozen values") {
  WordBudget budget;
  CHECK(enumerate_stratum(DGerm(4, -1), type("1"), Stratum::C0, budget) == 6);
  CHECK(enumerate_stratum(DGerm(4, -1), type("1"), Stratum::C1, budget) == 6);
  CHECK(enumerate_stratum(DGerm(4, -1), type("1"), Stratum::I1, budget) == 1);
  CHECK(enumerate_stratum(DGerm(4, 1), type("A3"), Stratum::Pi3, budget) == 2);
  CHECK(enumerate_stratum(DGerm(4, -1), type("A3"), Stratum::Pi3, budget) == 2);
  CHECK(enumerate_stratum(DGerm(4, 1), type("A1^2"), Stratum::Pi2, budget) == 1);
  CHECK(enumerate_stratum(DGerm(4, -1), type("A1^2"), Stratum::Pi2, budget) == 3);

  // Pi2 / Pi3 require divisibility.
  CHECK(enumerate_stratum(DGerm(4, -1), type("A1"), Stratum::Pi2, budget) == 0);
  CHECK(enumerate_stratum(DGerm(4, -1), type("A2"), Stratum::Pi3, budget) == 0);

  // codim > mu + 2: every range is vacuous.
  for (auto s : {Stratum::C0, Stratum::C1, Stratum::I1, Stratum::Pi2, Stratum::Pi3}) {
    for (int delta : {1, -1}) {
      CHECK(enumerate_stratum(DGerm(4, delta), type("A1^2 A3"), s, budget) == 0);
    }
  }
}

TEST_CASE("oracle_adjacency_index frozen values") {
  CHECK(oracle_adjacency_index(DGerm(4, -1), type("A1")) == 14);
  CHECK(oracle_adjacency_index(DGerm(5, 1), type("1")) == 6);
  CHECK(oracle_adjacency_index(DGerm(4, -1), type("A1^2")) == 9);
  CHECK(oracle_adjacency_index(DGerm(4, 1), type("A1^2")) == 1);
  CHECK(oracle_adjacency_index(DGerm(4, -1), type("A2")) == 6);
  CHECK(oracle_adjacency_index(DGerm(4, 1), type("1")) == 3);
  CHECK(oracle_adjacency_index(DGerm(4, -1), type("1")) == 7);
  CHECK(oracle_adjacency_index(DGerm(4, 1), type("A1")) == 4);
  CHECK(oracle_adjacency_index(DGerm(6, -1), type("A1")) == 34);
  CHECK(oracle_adjacency_index(DGerm(5, 1), type("A1")) == 15);
}

TEST_CASE("level multisets hold the profile plus one marker") {
  auto ms = level_multiset(type("A1^2 A2"), 3, MarkerKind::NonRootPoint);
  CHECK(ms.size() == 7);
  CHECK(std::count(ms.begin(), ms.end(), Symbol::simple()) == 3);
  CHECK(std::count(ms.begin(), ms.end(), Symbol::even_root(1)) == 2);
  CHECK(std::count(ms.begin(), ms.end(), Symbol::odd_root(2)) == 1);
  CHECK(std::is_sorted(ms.begin(), ms.end()));

  auto tagged = level_multiset(type("1"), 2, MarkerKind::SimpleRoot);
  CHECK(tagged.size() == 2);
  CHECK_THROWS_AS(level_multiset(type("1"), 0, MarkerKind::SimpleRoot), std::invalid_argument);
}

TEST_CASE("each distinct word is generated exactly once") {
  for (const char* text : {"1", "A1", "A1^2 A2", "A2^2 A3", "A1 A2 A4"}) {
    for (int i0 = 0; i0 <= 3; ++i0) {
      for (auto marker : {MarkerKind::NonRootPoint, MarkerKind::TripleRoot}) {
        const auto ms = level_multiset(type(text), i0, marker);
        const auto expected = distinct_words_by_labels(ms);
        std::set<std::vector<Symbol>> seen;
        std::size_t generated = 0;
        auto w = ms;
        do {
          ++generated;
          seen.insert(w);
        } while (std::next_permutation(w.begin(), w.end()));
        CHECK(generated == expected.size());
        CHECK(seen == expected);
      }
    }
  }
}

TEST_CASE("level counts match brute-force filtering of labelled permutations") {
  // C0 levels for a few types: count negative-marker words among all distinct
  // labelled permutations.
  for (const char* text : {"1", "A1", "A2", "A1 A2", "A1^2 A4"}) {
    const auto t = type(text);
    for (int delta : {1, -1}) {
      const int mu = t.codim() + 4;
      for (int i0 = 0; i0 <= 4; i0 += 2) {
        const auto ms = level_multiset(t, i0, MarkerKind::NonRootPoint);
        std::size_t negatives = 0;
        for (const auto& w : distinct_words_by_labels(ms)) {
          if (interval_sign_at_marker({w}, delta) < 0) ++negatives;
        }
        WordBudget budget;
        CAPTURE(text);
        CAPTURE(i0);
        CHECK(enumerate_level(mu, delta, t, Stratum::C0, i0, budget) == negatives);
      }
    }
  }
}

TEST_CASE("marker placements reproduce the root-placement factorization") {
  for (const char* text : {"1", "A1", "A2", "A1^2 A2", "A2 A3", "A4 A1^2"}) {
    const auto t = type(text);
    const Profile p = profile_of(t);
    for (int delta : {1, -1}) {
      for (int i0 = 0; i0 <= 4; ++i0) {
        const int mu = t.codim() + i0 + 4;  // parity and range admit this i0
        WordBudget budget;
        const Count negative = enumerate_level(mu, delta, t, Stratum::C0, i0, budget);

        std::vector<int> odd = {i0};
        for (auto [alpha, i] : p.even_part) odd.push_back(i);
        std::vector<int> even = {1 + i0 + p.m1};
        for (auto [beta, j] : p.odd_part) even.push_back(j);
        std::vector<int> all = odd;
        for (auto [beta, j] : p.odd_part) all.push_back(j);
        all.push_back(1);

        CAPTURE(text);
        CAPTURE(i0);
        CHECK(negative == multinomial(odd) * multinomial(even) * delta_count(delta, i0, p.m1));

        // Every word puts zero in either a negative or a positive interval.
        std::size_t positive = 0;
        auto w = level_multiset(t, i0, MarkerKind::NonRootPoint);
        do {
          if (interval_sign_at_marker({w}, delta) > 0) ++positive;
        } while (std::next_permutation(w.begin(), w.end()));
        CHECK(negative + positive == multinomial(all));
      }
    }
  }
}

TEST_CASE("stratum-level equivalence with the integer path") {
  for (int mu = 4; mu <= 8; ++mu) {
    for (int delta : {1, -1}) {
      for (const auto& t : enumerate_candidate_types(mu)) {
        WordBudget budget;
        const StratumCounts counts = enumerate_all(mu, delta, t, budget);
        const StratumTerms terms = compute_terms_integer(mu, delta, t);
        CAPTURE(mu);
        CAPTURE(delta);
        CAPTURE(format_type(t));
        CHECK(counts.c0 == terms.c0);
        CHECK(counts.c1 == terms.c1);
        CHECK(counts.i1 == terms.i1);
        CHECK(counts.pi2 == terms.pi2_count);
        CHECK(counts.pi3 == terms.pi3_count);
      }
    }
  }
}

TEST_CASE("word cap") {
  WordBudget budget(5);
  CHECK_THROWS_AS(enumerate_stratum(DGerm(8, 1), type("A1 A2"), Stratum::C0, budget),
                  CapExceeded);
  CHECK_THROWS_AS(oracle_adjacency_index(DGerm(9, 1), type("A1"), 10), CapExceeded);
  CHECK_NOTHROW(oracle_adjacency_index(DGerm(4, 1), type("A5"), 1));
}

TEST_CASE("oracle rejects invalid germs") {
  WordBudget budget;
  CHECK_THROWS_AS(enumerate_stratum(3, 1, type("1"), Stratum::C0, budget), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_stratum(5, 0, type("1"), Stratum::C0, budget), std::invalid_argument);
}
