#include "skewdet/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewdet {

namespace {

Part sum_of(const Parts& v) {
  Part s = 0;
  for (Part x : v) s += x;
  return s;
}

// Shared normal form: sort keys v_i - i into strictly decreasing order,
// result_i = v_{w(i)} - w(i) + i, sign = sgn(w).
std::optional<SortedShape> sort_to_partition(const Parts& v) {
  const std::size_t t = v.size();
  std::vector<std::size_t> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return v[a] - static_cast<Part>(a) > v[b] - static_cast<Part>(b);
  });
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (v[idx[i]] - static_cast<Part>(idx[i]) == v[idx[i + 1]] - static_cast<Part>(idx[i + 1]))
      return std::nullopt;
  }
  Parts shape(t);
  for (std::size_t i = 0; i < t; ++i)
    shape[i] = v[idx[i]] - static_cast<Part>(idx[i]) + static_cast<Part>(i);
  int sign = 1;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (idx[i] > idx[j]) sign = -sign;
  return SortedShape{Partition(std::move(shape)), sign};
}

} // namespace

Partition::Partition(Parts p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts[i - 1] < parts[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Part Partition::sum() const { return sum_of(parts); }

IntSeq::IntSeq(Parts p) : parts(std::move(p)) {
  for (Part x : parts)
    if (x < 0) throw std::invalid_argument("IntSeq: negative entry");
}

Part IntSeq::sum() const { return sum_of(parts); }

SkewRef::SkewRef(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  if (outer.length() != inner.length())
    throw std::invalid_argument("SkewRef: outer and inner must have equal length");
  if (!contains(outer, inner))
    throw std::invalid_argument("SkewRef: inner not contained in outer");
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.length(); ++i) {
    Part out_i = i < outer.length() ? outer[i] : 0;
    if (inner[i] > out_i) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  Part cols = p.length() ? p[0] : 0;
  Parts c(static_cast<std::size_t>(cols), 0);
  for (std::size_t i = 0; i < p.length(); ++i)
    for (Part j = 0; j < p[i]; ++j) c[static_cast<std::size_t>(j)]++;
  return Partition(std::move(c));
}

Partition padded(const Partition& p, std::size_t len) {
  if (len < p.length()) throw std::invalid_argument("padded: target length too small");
  Parts q = p.parts;
  q.resize(len, 0);
  return Partition(std::move(q));
}

std::optional<SortedShape> sort_rows_to_partition(const IntSeq& l) {
  return sort_to_partition(l.parts);
}

std::optional<SortedShape> sort_cols_to_partition(const IntSeq& m) {
  return sort_to_partition(m.parts);
}

} // namespace skewdet
