#pragma once

#include <vector>

#include "skewdet/exact.hpp"
#include "skewdet/shapes.hpp"

namespace skewdet {

// det | 1/(e(i,j))! | for an integer exponent matrix, using the convention
// 1/n! = 0 for n < 0. Computed exactly via row scaling and integer elimination.
ExactRational factorial_determinant(const std::vector<std::vector<Part>>& e);

// |l/m|! * det | 1/(l_i - m_j + j - i)! |, for arbitrary integer sequences
// (entries may be negative). Returns 0 when |l/m| < 0. The result is asserted
// to be an integer.
ExactInt f_det(const Parts& l, const Parts& m);

// Generalized skew standard tableau number on nonnegative sequences.
ExactInt f_generalized(const IntSeq& l, const IntSeq& m);

} // namespace skewdet
