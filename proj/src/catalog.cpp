#include "legadj/catalog.hpp"

#include <algorithm>

#include "legadj/parallel.hpp"

namespace legadj {

namespace {

// Depth-first over nondecreasing factor lists whose (index + 1) sum is exactly
// `remaining`; choosing the next index in ascending order yields lexicographic
// order within a codim level.
void emit_level(int remaining, int min_index, std::vector<int>& factors,
                const std::function<void(const MultisingularityType&)>& emit) {
  if (remaining == 0) {
    MultisingularityType::Exponents exponents;
    for (int index : factors) ++exponents[index];
    emit(MultisingularityType(std::move(exponents)));
    return;
  }
  for (int index = min_index; index + 1 <= remaining; ++index) {
    factors.push_back(index);
    emit_level(remaining - (index + 1), index, factors, emit);
    factors.pop_back();
  }
}

}  // namespace

void for_each_type_up_to(int max_codim,
                         const std::function<void(const MultisingularityType&)>& emit) {
  std::vector<int> factors;
  for (int codim = 0; codim <= max_codim; ++codim) emit_level(codim, 1, factors, emit);
}

std::vector<MultisingularityType> enumerate_candidate_types(int mu) {
  std::vector<MultisingularityType> types;
  for_each_type_up_to(mu + 2, [&](const MultisingularityType& t) { types.push_back(t); });
  return types;
}

std::vector<MultisingularityType> enumerate_candidate_types(const DGerm& germ) {
  return enumerate_candidate_types(germ.mu());
}

bool catalog_less(const MultisingularityType& lhs, const MultisingularityType& rhs) {
  if (lhs.codim() != rhs.codim()) return lhs.codim() < rhs.codim();
  const auto a = lhs.factor_list();
  const auto b = rhs.factor_list();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<CatalogEntry> build_table(const DGerm& germ, bool include_zero, unsigned threads) {
  const auto candidates = enumerate_candidate_types(germ);
  auto reports = parallel_map<AdjacencyReport>(
      candidates.size(), threads,
      [&](std::size_t i) { return adjacency_index(germ, candidates[i]); });

  std::vector<CatalogEntry> table;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!include_zero && reports[i].j == 0) continue;
    table.push_back({candidates[i], std::move(reports[i])});
  }
  return table;
}

}  // namespace legadj
