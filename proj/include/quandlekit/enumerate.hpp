#pragma once

#include <vector>

#include "quandlekit/constructions.hpp"
#include "quandlekit/op_table.hpp"

namespace quandlekit {

// A table in canonical labeling: the lexicographic minimum, by flattened
// row-major entries, over all relabelings of its isomorphism class.
struct CanonicalTable {
  OpTable table;
};

CanonicalTable canonical_form(const OpTable& t);

// True when t already is the minimum of its relabeling orbit.
bool is_canonical(const OpTable& t);

inline constexpr int default_enumeration_cap = 7;

// All quandles of order n, built column-by-column (each column a permutation
// fixing its diagonal point) with incremental self-distributivity pruning.
// With up_to_iso only canonical representatives are kept. Orders above the
// cap are rejected; results are sorted by table entries.
std::vector<OpTable> enumerate_quandles(int n, bool up_to_iso,
                                        int cap = default_enumeration_cap);

// Same search without the idempotency constraint. Uncalibrated beyond small
// orders, hence the lower default cap.
std::vector<OpTable> enumerate_racks(int n, bool up_to_iso, int cap = 5);

struct SurveyCell {
  AxiomReport report;
  bool distributes = false;  // does T_j distribute over T_i?
};

// Pairwise composition census: cell (i, j) classifies compose(T_i, T_j).
struct SurveyReport {
  std::vector<CatalogEntry> generators;
  std::vector<std::vector<SurveyCell>> grid;
};

SurveyReport composition_survey(const std::vector<CatalogEntry>& tables);
SurveyReport composition_survey(const std::vector<OpTable>& tables);

}  // namespace quandlekit
