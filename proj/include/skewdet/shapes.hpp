#pragma once

#include <optional>
#include <vector>

#include "skewdet/exact.hpp"

namespace skewdet {

using Part = long long;
using Parts = std::vector<Part>;

// Weakly decreasing, nonnegative parts. Trailing zeros are allowed and
// significant for row-indexed constructions, so they are preserved.
struct Partition {
  Parts parts;

  Partition() = default;
  explicit Partition(Parts p);

  std::size_t length() const { return parts.size(); }
  Part operator[](std::size_t i) const { return parts[i]; } // 0-based
  Part sum() const;
  bool operator==(const Partition&) const = default;
};

// Finite sequence of nonnegative integers (no monotonicity requirement).
struct IntSeq {
  Parts parts;

  IntSeq() = default;
  explicit IntSeq(Parts p);

  std::size_t length() const { return parts.size(); }
  Part operator[](std::size_t i) const { return parts[i]; }
  Part sum() const;
  bool operator==(const IntSeq&) const = default;
};

// Skew shape outer/inner; same length, inner contained in outer.
struct SkewRef {
  Partition outer, inner;

  SkewRef() = default;
  SkewRef(Partition out, Partition in);

  std::size_t rows() const { return outer.length(); }
  Part size() const { return outer.sum() - inner.sum(); }
  bool operator==(const SkewRef&) const = default;
};

bool contains(const Partition& outer, const Partition& inner);
Partition conjugate(const Partition& p);
Partition padded(const Partition& p, std::size_t len);

struct SortedShape {
  Partition shape;
  int sign; // +1 or -1
};

// Row normal form: sorts l (with l_i >= base_i expected) into the unique
// partition lam with lam_i = l_{w(i)} - w(i) + i; returns the sign of w.
// Empty result when two values l_i - i collide (the determinant vanishes).
std::optional<SortedShape> sort_rows_to_partition(const IntSeq& l);

// Column normal form: mu_j = m_{w(j)} + j - w(j) sorted to a partition.
std::optional<SortedShape> sort_cols_to_partition(const IntSeq& m);

} // namespace skewdet
