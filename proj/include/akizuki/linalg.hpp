#pragma once

#include "akizuki/ring_c.hpp"

namespace akizuki {

struct AMatrix {
  std::vector<std::vector<AElem>> rows;
  std::vector<std::string> row_labels;  // word tags, optional
  std::vector<std::string> col_labels;

  long n_rows() const { return static_cast<long>(rows.size()); }
  long n_cols() const { return rows.empty() ? 0 : static_cast<long>(rows[0].size()); }
};

// Exact solve of M h = b over A. Elimination picks the minimum-valuation pivot
// over the whole remaining block (row and column swaps), so entries right of a
// pivot always have valuation >= the pivot's; a divisibility failure during
// back-substitution then certifies NoSolution over A, not merely over Frac A.
// nullopt = NoSolution.
std::optional<std::vector<AElem>> solve_linear(const AMatrix& M,
                                               const std::vector<AElem>& b);

// Searches for target = sum_j multiplier_j * generator_j with multipliers in
// the level-s word basis up to degree_bound + slack. A returned certificate
// verifies exactly; nullopt means NotFoundWithinBounds and is inconclusive.
std::optional<Certificate> module_membership(const BElem& target,
                                             const std::vector<CElem>& generators,
                                             long level, long degree_bound,
                                             long slack = 2);

}  // namespace akizuki
