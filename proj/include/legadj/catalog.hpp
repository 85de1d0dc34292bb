#pragma once

#include <functional>
#include <vector>

#include "legadj/adjacency.hpp"
#include "legadj/sing_algebra.hpp"

namespace legadj {

struct CatalogEntry {
  MultisingularityType type;
  AdjacencyReport report;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Streams every A-product with codim <= max_codim in catalog order:
/// ascending codim, then lexicographic on the ascending factor list.
void for_each_type_up_to(int max_codim,
                         const std::function<void(const MultisingularityType&)>& emit);

/// All candidate types for a germ (codim <= mu + 2) in catalog order.
std::vector<MultisingularityType> enumerate_candidate_types(const DGerm& germ);
std::vector<MultisingularityType> enumerate_candidate_types(int mu);

/// Catalog ordering predicate.
bool catalog_less(const MultisingularityType& lhs, const MultisingularityType& rhs);

/// Adjacency table for a germ. Rows with J = 0 are dropped unless
/// include_zero is set. threads = 0 uses the hardware concurrency.
std::vector<CatalogEntry> build_table(const DGerm& germ, bool include_zero,
                                      unsigned threads = 0);

}  // namespace legadj
