#pragma once

#include <optional>
#include <utility>

#include "skewdet/exact.hpp"
#include "skewdet/shapes.hpp"

namespace skewdet {

// Genus, rank, degree and the two vanishing sequences, validated on
// construction: sequences of length r+1, strictly increasing within [0, d].
struct BNInstance {
  long long g, r, d;
  Parts a, b;

  BNInstance(long long g_, long long r_, long long d_, Parts a_, Parts b_);
};

// g - sum_i (g - d + a_i + b_{r-i})
long long bn_rho(const BNInstance& inst);

struct BNShapes {
  long long n;
  Partition lam, mu;
};

// lam_i = n + a_{r+1-i} - (r+1-i), mu_i = n - b_{i-1} + i - 1 - g + d - r.
// The default twist is n = max(2g-1-d+b_r, g-d+b_r, 0), the smallest value
// keeping degree-(d+n-b_r) bundles non-special and all parts nonnegative.
// Smaller explicit values are rejected; larger ones only translate the shape.
BNShapes bn_shapes(const BNInstance& inst, std::optional<long long> n = std::nullopt);

// Euler characteristic as the signed binomial sum of factorial determinants
// over row moves m_i <= mu_i, l_i >= lam_i with |l/m| = |lam/mu| + rho.
// Zero when rho < 0. The result does not depend on the twist n, which may be
// raised above the default to exercise that invariance.
ExactInt euler_thm1(const BNInstance& inst, std::optional<long long> n = std::nullopt,
                    int jobs = 1);

// Same number as a signed tableau count over partitions mu^- inside mu and
// lam^+ outside lam, all three factors evaluated as binomial or factorial
// determinants.
ExactInt euler_tableau(const BNInstance& inst, std::optional<long long> n = std::nullopt);

// rho = 1 only: sum of boundary-box tableau counts. Throws std::logic_error
// if the content identity
//   (r+1)(|lam/mu|+1) f^{lam/mu}
//     = sum_i (lam_i+r+2-i) f^{(lam+e_i)/mu} - sum_i (mu_i+r+1-i) f^{lam/(mu-e_i)}
// fails, as an internal cross-check.
ExactInt clpt_check(const BNInstance& inst);

// b = (0, ..., r) only: the reduced straight shape lam_i - mu_i, with rows
// g - d + a_{r+1-i} + i - 1. Throws if b differs or a row is negative.
Partition one_pointed_shape(const BNInstance& inst);

// One-pointed Euler characteristic as a Vandermonde-type sum over row
// extensions of the reduced shape. Requires b = (0, ..., r).
ExactInt one_pointed_euler(const BNInstance& inst);

// The same at rho = 1 via the Kronecker-delta form.
ExactInt one_pointed_rho1(const BNInstance& inst);

// (-1)^rho times the number of set-valued standard fillings with rho extra
// entries on the reduced shape. Requires b = (0, ..., r).
ExactInt chan_pflueger_count(const BNInstance& inst);

// No point conditions, lam = (g-d+r)^{r+1}: signed sum over partitions gamma
// of rho weighted by falling factorials and two straight-shape counts.
// Requires 0 <= rho <= g.
ExactInt classical_euler(long long g, long long r, long long d);

// g! prod_{i=0}^{r} i! / (g-d+r+i)!
ExactRational castelnuovo_prefactor(long long g, long long r, long long d);

struct ClosedFormValue {
  bool degenerate = false; // the rational expression hits a zero denominator
  ExactInt value;          // meaningful only when degenerate is false
};

// Closed form for rho in {0, 1, 2, 3} in terms of the prefactor above.
ClosedFormValue closed_form_euler(long long g, long long r, long long d);

// g - d + r = 1: the single binomial binom(-r-1, rho).
ExactInt closed_form_s1(long long g, long long r, long long d);

// Every closed form applicable to (g, r, d); throws when neither the
// rho <= 3 regime nor g - d + r = 1 applies.
struct ClosedForms {
  long long rho = 0;
  long long s = 0; // g - d + r
  bool rho_form_applies = false;
  ClosedFormValue rho_form;
  bool s1_applies = false;
  ExactInt s1_value;
};

ClosedForms closed_forms(long long g, long long r, long long d);

// a_i + max{0, d - g - a_i - b_{r-i}}
Parts a_prime(const BNInstance& inst);

// rho' = g - sum_i max{0, a_i + b_{r-i} + g - d} and whether the locus is
// guaranteed nonempty (rho' >= 0).
std::pair<long long, bool> nonempty_criterion(const BNInstance& inst);

// | 1/(a_{r-i} + b_j + g - d)! | for 0 <= i, j <= r; g! times this is the
// Euler characteristic when rho = 0, and it vanishes when lam/mu is not a
// skew shape.
ExactRational numclass_coefficient(const BNInstance& inst);

} // namespace skewdet
