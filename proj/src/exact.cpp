#include "skewdet/exact.hpp"

#include <stdexcept>
#include <utility>

namespace skewdet {

ExactInt binomial(const ExactInt& n, long long k) {
  if (k < 0) return 0;
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

ExactInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactRational inv_factorial(long long n) {
  if (n < 0) return ExactRational(0);
  ExactRational q(ExactInt(1), factorial(n));
  q.canonicalize();
  return q;
}

ExactInt falling_factorial(const ExactInt& n, long long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  ExactInt r = 1;
  ExactInt v = n;
  for (long long s = 0; s < k; ++s) {
    r *= v;
    v -= 1;
  }
  return r;
}

ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m) {
  const std::size_t t = m.size();
  for (const auto& row : m)
    if (row.size() != t) throw std::invalid_argument("bareiss_determinant: non-square matrix");
  if (t == 0) return 1;

  int sign = 1;
  ExactInt prev = 1;
  for (std::size_t k = 0; k + 1 < t; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < t && m[piv][k] == 0) ++piv;
      if (piv == t) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < t; ++i) {
      for (std::size_t j = k + 1; j < t; ++j) {
        ExactInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[t - 1][t - 1] : ExactInt(-m[t - 1][t - 1]);
}

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::logic_error("make_rational: zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInt rational_to_integer(const ExactRational& q) {
  ExactRational r = q;
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("rational_to_integer: value is not an integer");
  return r.get_num();
}

} // namespace skewdet
