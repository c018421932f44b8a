#pragma once

#include "skewdet/poly.hpp"
#include "skewdet/shapes.hpp"

namespace skewdet {

enum class CMode { cohomology, k_theory };

// Per-cell variable bounds for the entry classes: column j of the matrix
// uses x_1..x_{p_j}, row i uses y_1..y_{q_i}.
struct CMatrixSpec {
  Parts p, q;
  CMode mode = CMode::cohomology;
};

struct DegreeCap {
  long long cap = 4;
};

// Coefficient of u^k in prod_a (1 - u y_a) / prod_b (1 - u x_b), with the
// substituted variables x/(1+bx), y/(1+by) in K-theory mode (truncated in b).
// k < 0 gives 0, k = 0 gives 1.
MultiPoly c_coeff(const CMatrixSpec& spec, std::size_t i, std::size_t j, long long k,
                  DegreeCap cap);

// Determinant |sum_k binom(lam_i - mu_j + k - 1, k) b^k c_{lam_i - mu_j + j - i + k}(i, j)|.
// With beta_on the result is the b-degree <= cap window of the series; it is
// recomputed at cap+1 and must agree on that window (throws otherwise).
// Without beta_on only the k = 0 term remains.
MultiPoly delta_determinant(const Partition& lam, const Partition& mu, const CMatrixSpec& spec,
                            bool beta_on, DegreeCap cap);

// Determinant of a square polynomial matrix by cofactor expansion.
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m);

} // namespace skewdet
