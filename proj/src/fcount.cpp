#include "skewdet/fcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewdet {

ExactRational factorial_determinant(const std::vector<std::vector<Part>>& e) {
  const std::size_t t = e.size();
  for (const auto& row : e)
    if (row.size() != t) throw std::invalid_argument("factorial_determinant: non-square matrix");
  if (t == 0) return ExactRational(1);

  // Scale row i by R_i! so entries become integer falling factorials
  // R_i!/(e_ij)!, then divide the integer determinant by prod R_i!.
  std::vector<std::vector<ExactInt>> m(t, std::vector<ExactInt>(t));
  ExactInt den = 1;
  for (std::size_t i = 0; i < t; ++i) {
    Part r = *std::max_element(e[i].begin(), e[i].end());
    if (r < 0) return ExactRational(0); // whole row vanishes
    ExactInt rfact = factorial(r);
    den *= rfact;
    for (std::size_t j = 0; j < t; ++j) {
      m[i][j] = e[i][j] < 0 ? ExactInt(0) : ExactInt(rfact / factorial(e[i][j]));
    }
  }
  return make_rational(bareiss_determinant(std::move(m)), den);
}

ExactInt f_det(const Parts& l, const Parts& m) {
  const std::size_t t = l.size();
  if (m.size() != t) throw std::invalid_argument("f_det: length mismatch");
  Part sz = 0;
  for (std::size_t i = 0; i < t; ++i) sz += l[i] - m[i];
  if (sz < 0) return 0;

  std::vector<std::vector<Part>> e(t, std::vector<Part>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      e[i][j] = l[i] - m[j] + static_cast<Part>(j) - static_cast<Part>(i);
  ExactRational v = factorial_determinant(e);
  v *= ExactRational(factorial(sz));
  v.canonicalize();
  return rational_to_integer(v);
}

ExactInt f_generalized(const IntSeq& l, const IntSeq& m) {
  return f_det(l.parts, m.parts);
}

} // namespace skewdet
