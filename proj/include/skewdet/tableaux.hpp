#pragma once

#include <compare>
#include <map>
#include <vector>

#include "skewdet/exact.hpp"
#include "skewdet/shapes.hpp"

namespace skewdet {

struct Cell {
  int row, col; // 1-based
  auto operator<=>(const Cell&) const = default;
};

// Box labels; single-entry vectors for plain tableaux, sorted sets for
// set-valued ones.
struct Filling {
  SkewRef shape;
  std::map<Cell, std::vector<int>> boxes;

  long long total_entries() const;
  bool operator==(const Filling&) const = default;
};

// Per-row upper bound on entry values (1-based rows).
struct Flagging {
  Parts bound;
};

std::vector<Cell> cells_of(const SkewRef& shape); // row-major

// Standard fillings: entries 1..size, rows and columns strictly increasing.
// Counted by a memoized corner-removal recursion; the enumerator is the raw
// backtracking reference for small shapes.
ExactInt count_standard(const SkewRef& shape);
std::vector<Filling> enumerate_standard(const SkewRef& shape);

// Rows strictly increasing, columns weakly increasing, row-i entries in
// {1..mu_i}; equals alpha_determinant.
ExactInt count_alpha(const Partition& mu, const Partition& mu_minus);
ExactInt alpha_determinant(const Partition& mu, const Partition& mu_minus);

// Rows and columns strictly increasing, row-i entries in {1..lam_plus_i - 1};
// equals zeta_determinant.
ExactInt count_zeta(const Partition& lam_plus, const Partition& lam);
ExactInt zeta_determinant(const Partition& lam_plus, const Partition& lam);

// Rows and columns strictly increasing, row-i entries in {1..i-1}.
ExactInt count_row_indexed_strict(const Partition& nu_plus, const Partition& nu);

// Generic single-entry enumerator used by the counters above and by the
// column-shift bijection tests: per-row inclusive value ranges, strict or
// weak comparisons along rows and down columns.
std::vector<Filling> enumerate_simple(const SkewRef& shape, const Parts& row_lo,
                                      const Parts& row_hi, bool strict_rows, bool strict_cols);

// Entry e in column j maps to e + j; inverse of subtract_column_index.
// Sends weakly-increasing-row fillings to strictly-increasing-row ones.
Filling add_column_index(const Filling& f);
Filling subtract_column_index(const Filling& f);

// Set-valued fillings of a straight shape by {1..|lam|+rho}, every value used
// exactly once, rows and columns strictly increasing box-to-box.
ExactInt count_rho_set_valued(const Partition& lam, long long rho);
std::vector<Filling> enumerate_rho_set_valued(const Partition& lam, long long rho);

// Sum over nu_plus containing nu = conjugate(lam) with |nu_plus/nu| = rho of
// count_row_indexed_strict(nu_plus, nu) * count_standard(nu_plus).
ExactInt lenart_rhs(const Partition& lam, long long rho);

// Set-valued fillings with weak row steps (max of a box <= min of the box to
// its right), strict column steps, row-i entries in {1..flag_i}. Optional cap
// on the total number of entries (-1 for unlimited).
std::vector<Filling> enumerate_flagged_set_valued(const SkewRef& shape, const Flagging& flag,
                                                  long long max_total = -1);

} // namespace skewdet
