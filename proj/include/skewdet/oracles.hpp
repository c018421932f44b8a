#pragma once

#include "skewdet/delta.hpp"
#include "skewdet/permutations.hpp"
#include "skewdet/poly.hpp"

namespace skewdet {

// Double Schubert polynomial: the staircase product prod_{i+j<=n}(x_i - y_j)
// for the longest element, pushed down with divided differences at ascents.
// Memoized across calls; thread safe.
MultiPoly schubert_oracle(const Permutation& w);

// Double or single Grothendieck polynomial as a sum over pipe dreams with up
// to cap extra crossings, a crossing at (i, j) weighing x_i, respectively
// (x_i - y_j) * sum_s (-b y_j)^s. Single sums are polynomials and the cap
// must capture them whole; double sums are series and only the b <= cap
// window is reported. Either way the cap+1 recomputation must agree (throws
// otherwise).
MultiPoly grothendieck_oracle(const Permutation& w, bool double_vars, DegreeCap cap);

// Sum of b^(entries - length) x^T over flagged set-valued tableaux with at
// most cap excess entries, same stabilization contract as above.
MultiPoly fsvt_generating_function(const Permutation& w, DegreeCap cap);

// Checks that e_i(1-e^{-x_1}, ..., 1-e^{-x_n}) == e_i(x_1, ..., x_n) modulo
// the power sums p_2, ..., p_n and all terms of degree above n, by exact
// linear algebra over the rationals in each homogeneous degree.
bool verify_lemma_powers(int n, int i);

} // namespace skewdet
