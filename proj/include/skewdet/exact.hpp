#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace skewdet {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

// gmpxx on this toolchain has no long long constructor; LP64 long is enough.
inline ExactInt to_exact(long long v) { return ExactInt(static_cast<long>(v)); }

// n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0. n may be any integer,
// so binomial(-3, 2) == 6.
ExactInt binomial(const ExactInt& n, long long k);

ExactInt factorial(long long n);

// 1/n! for n >= 0; exactly 0 for negative n.
ExactRational inv_factorial(long long n);

// Falling factorial (n)_k = n(n-1)...(n+1-k); (n)_0 = 1.
ExactInt falling_factorial(const ExactInt& n, long long k);

// Exact determinant of an integer matrix, fraction-free elimination.
ExactInt bareiss_determinant(std::vector<std::vector<ExactInt>> m);

// Rational value num/den reduced; throws std::logic_error if den == 0.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

// Asserts q is an integer and returns it.
ExactInt rational_to_integer(const ExactRational& q);

} // namespace skewdet
