#include "skewdet/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace skewdet {

long long Filling::total_entries() const {
  long long n = 0;
  for (const auto& [cell, set] : boxes) n += static_cast<long long>(set.size());
  return n;
}

std::vector<Cell> cells_of(const SkewRef& shape) {
  std::vector<Cell> cs;
  for (std::size_t i = 0; i < shape.rows(); ++i)
    for (Part j = shape.inner[i] + 1; j <= shape.outer[i]; ++j)
      cs.push_back(Cell{static_cast<int>(i + 1), static_cast<int>(j)});
  return cs;
}

namespace {

using ShapeKey = std::pair<Parts, Parts>;

std::map<ShapeKey, ExactInt> g_standard_memo;
std::mutex g_standard_mutex;

// Drop empty rows and shift columns left; neither changes the count.
ShapeKey normalized_key(const Parts& outer, const Parts& inner) {
  Parts out, in;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] > inner[i]) {
      out.push_back(outer[i]);
      in.push_back(inner[i]);
    }
  }
  if (!out.empty()) {
    Part shift = *std::min_element(in.begin(), in.end());
    for (auto& x : out) x -= shift;
    for (auto& x : in) x -= shift;
  }
  return {std::move(out), std::move(in)};
}

ExactInt count_standard_rec(const Parts& outer, const Parts& inner) {
  ShapeKey key = normalized_key(outer, inner);
  if (key.first.empty()) return 1;
  {
    std::lock_guard<std::mutex> lk(g_standard_mutex);
    auto it = g_standard_memo.find(key);
    if (it != g_standard_memo.end()) return it->second;
  }
  const Parts& out = key.first;
  const Parts& in = key.second;
  ExactInt total = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i + 1 < out.size() && out[i + 1] == out[i]) continue; // box below blocks removal
    Parts out2 = out;
    out2[i] -= 1;
    total += count_standard_rec(out2, in);
  }
  std::lock_guard<std::mutex> lk(g_standard_mutex);
  g_standard_memo.emplace(std::move(key), total);
  return total;
}

} // namespace

ExactInt count_standard(const SkewRef& shape) {
  return count_standard_rec(shape.outer.parts, shape.inner.parts);
}

std::vector<Filling> enumerate_standard(const SkewRef& shape) {
  const auto cells = cells_of(shape);
  const std::size_t n = cells.size();
  std::vector<Filling> result;
  std::map<Cell, std::vector<int>> cur;
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v > n) {
      result.push_back(Filling{shape, cur});
      return;
    }
    for (const Cell& c : cells) {
      if (cur.count(c)) continue;
      Cell left{c.row, c.col - 1}, above{c.row - 1, c.col};
      bool left_ok = true, above_ok = true;
      for (const Cell& d : cells) {
        if (d == left && !cur.count(d)) left_ok = false;
        if (d == above && !cur.count(d)) above_ok = false;
      }
      if (!left_ok || !above_ok) continue;
      cur[c] = {static_cast<int>(v)};
      place(v + 1);
      cur.erase(c);
    }
  };
  place(1);
  return result;
}

namespace {

struct SimpleSpec {
  const SkewRef& shape;
  Parts lo, hi;     // per-row inclusive value bounds
  bool strict_rows; // strictly increasing along rows (else weakly)
  bool strict_cols; // strictly increasing down columns (else weakly)
};

void simple_rec(const SimpleSpec& spec, const std::vector<Cell>& cells, std::size_t k,
                std::map<Cell, int>& cur, const std::function<void()>& emit) {
  if (k == cells.size()) {
    emit();
    return;
  }
  const Cell c = cells[k];
  Part lo = spec.lo[static_cast<std::size_t>(c.row - 1)];
  const Part hi = spec.hi[static_cast<std::size_t>(c.row - 1)];
  auto left = cur.find(Cell{c.row, c.col - 1});
  if (left != cur.end()) lo = std::max<Part>(lo, left->second + (spec.strict_rows ? 1 : 0));
  auto above = cur.find(Cell{c.row - 1, c.col});
  if (above != cur.end()) lo = std::max<Part>(lo, above->second + (spec.strict_cols ? 1 : 0));
  for (Part v = lo; v <= hi; ++v) {
    cur[c] = static_cast<int>(v);
    simple_rec(spec, cells, k + 1, cur, emit);
  }
  cur.erase(c);
}

ExactInt count_simple(const SimpleSpec& spec) {
  const auto cells = cells_of(spec.shape);
  ExactInt n = 0;
  std::map<Cell, int> cur;
  simple_rec(spec, cells, 0, cur, [&] { n += 1; });
  return n;
}

SkewRef padded_skew(const Partition& outer, const Partition& inner) {
  return SkewRef(outer, padded(inner, outer.length()));
}

} // namespace

std::vector<Filling> enumerate_simple(const SkewRef& shape, const Parts& row_lo,
                                      const Parts& row_hi, bool strict_rows, bool strict_cols) {
  if (row_lo.size() != shape.rows() || row_hi.size() != shape.rows())
    throw std::invalid_argument("enumerate_simple: bound length mismatch");
  SimpleSpec spec{shape, row_lo, row_hi, strict_rows, strict_cols};
  const auto cells = cells_of(shape);
  std::vector<Filling> result;
  std::map<Cell, int> cur;
  simple_rec(spec, cells, 0, cur, [&] {
    Filling f{shape, {}};
    for (const auto& [cell, v] : cur) f.boxes[cell] = {v};
    result.push_back(std::move(f));
  });
  return result;
}

ExactInt count_alpha(const Partition& mu, const Partition& mu_minus) {
  SkewRef shape = padded_skew(mu, mu_minus);
  SimpleSpec spec{shape, Parts(shape.rows(), 1), mu.parts, true, false};
  return count_simple(spec);
}

ExactInt alpha_determinant(const Partition& mu, const Partition& mu_minus) {
  const std::size_t t = mu.length();
  Partition mm = padded(mu_minus, t);
  std::vector<std::vector<ExactInt>> m(t, std::vector<ExactInt>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      m[i][j] = binomial(to_exact(mu[i]), mu[i] - mm[j] + static_cast<Part>(j) - static_cast<Part>(i));
  return bareiss_determinant(std::move(m));
}

ExactInt count_zeta(const Partition& lam_plus, const Partition& lam) {
  SkewRef shape = padded_skew(lam_plus, lam);
  Parts hi(shape.rows());
  for (std::size_t i = 0; i < shape.rows(); ++i) hi[i] = lam_plus[i] - 1;
  SimpleSpec spec{shape, Parts(shape.rows(), 1), hi, true, true};
  return count_simple(spec);
}

ExactInt zeta_determinant(const Partition& lam_plus, const Partition& lam) {
  const std::size_t t = lam_plus.length();
  Partition l = padded(lam, t);
  std::vector<std::vector<ExactInt>> m(t, std::vector<ExactInt>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      Part off = static_cast<Part>(j) - static_cast<Part>(i);
      m[i][j] = binomial(to_exact(lam_plus[i] + off - 1), lam_plus[i] - l[j] + off);
    }
  return bareiss_determinant(std::move(m));
}

ExactInt count_row_indexed_strict(const Partition& nu_plus, const Partition& nu) {
  SkewRef shape = padded_skew(nu_plus, nu);
  Parts hi(shape.rows());
  for (std::size_t i = 0; i < shape.rows(); ++i) hi[i] = static_cast<Part>(i); // row i+1 bound i
  SimpleSpec spec{shape, Parts(shape.rows(), 1), hi, true, true};
  return count_simple(spec);
}

Filling add_column_index(const Filling& f) {
  Filling g{f.shape, {}};
  for (const auto& [cell, set] : f.boxes) {
    std::vector<int> shifted;
    for (int e : set) shifted.push_back(e + cell.col);
    g.boxes[cell] = std::move(shifted);
  }
  return g;
}

Filling subtract_column_index(const Filling& f) {
  Filling g{f.shape, {}};
  for (const auto& [cell, set] : f.boxes) {
    std::vector<int> shifted;
    for (int e : set) shifted.push_back(e - cell.col);
    g.boxes[cell] = std::move(shifted);
  }
  return g;
}

namespace {

Parts trimmed(const Partition& p) {
  Parts q = p.parts;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

} // namespace

ExactInt count_rho_set_valued(const Partition& lam0, long long rho) {
  if (rho < 0) throw std::invalid_argument("count_rho_set_valued: negative rho");
  const Parts lam = trimmed(lam0);
  const long long boxes = [&] {
    long long b = 0;
    for (Part x : lam) b += x;
    return b;
  }();
  const long long values = boxes + rho;
  if (boxes == 0) return rho == 0 ? 1 : 0;

  // Insert values 1..values in order. A value may open the next cell of a row
  // (a growth corner) or join the last cell of a row whose right and lower
  // neighbours are still empty. State: current subdiagram + values placed.
  std::map<std::pair<Parts, long long>, ExactInt> memo;
  std::function<ExactInt(const Parts&, long long)> rec = [&](const Parts& nu,
                                                             long long used) -> ExactInt {
    long long filled = 0;
    for (Part x : nu) filled += x;
    if (values - used < boxes - filled) return 0;
    if (used == values) return filled == boxes ? 1 : 0;
    auto key = std::make_pair(nu, used);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ExactInt total = 0;
    long long joinable = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      Part below = i + 1 < nu.size() ? nu[i + 1] : 0;
      if (nu[i] >= 1 && below < nu[i]) ++joinable;
      if (nu[i] < lam[i] && (i == 0 || nu[i - 1] > nu[i])) {
        Parts nu2 = nu;
        nu2[i] += 1;
        total += rec(nu2, used + 1);
      }
    }
    if (joinable > 0) total += to_exact(joinable) * rec(nu, used + 1);
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(Parts(lam.size(), 0), 0);
}

std::vector<Filling> enumerate_rho_set_valued(const Partition& lam0, long long rho) {
  if (rho < 0) throw std::invalid_argument("enumerate_rho_set_valued: negative rho");
  Parts lam = trimmed(lam0);
  SkewRef shape(Partition(lam), Partition(Parts(lam.size(), 0)));
  const auto cells = cells_of(shape);
  const long long values = shape.size() + rho;
  std::vector<Filling> result;
  if (cells.empty()) {
    if (rho == 0) result.push_back(Filling{shape, {}});
    return result;
  }

  std::map<Cell, std::vector<int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(values) + 1, false);
  long long used_count = 0;

  // Candidate sets for one box, lexicographic, built from unused values >= lo.
  std::function<void(std::size_t)> next_box = [&](std::size_t k) {
    if (k == cells.size()) {
      if (used_count == values) result.push_back(Filling{shape, cur});
      return;
    }
    const Cell c = cells[k];
    long long lo = 1;
    auto left = cur.find(Cell{c.row, c.col - 1});
    if (left != cur.end()) lo = std::max<long long>(lo, left->second.back() + 1);
    auto above = cur.find(Cell{c.row - 1, c.col});
    if (above != cur.end()) lo = std::max<long long>(lo, above->second.back() + 1);

    std::vector<int> set;
    std::function<void(long long)> extend = [&](long long from) {
      if (!set.empty()) {
        // feasibility: each remaining box needs at least one value
        if (values - used_count >= static_cast<long long>(cells.size() - k - 1)) {
          cur[c] = set;
          next_box(k + 1);
          cur.erase(c);
        }
      }
      for (long long v = from; v <= values; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        set.push_back(static_cast<int>(v));
        used[static_cast<std::size_t>(v)] = true;
        ++used_count;
        extend(v + 1);
        --used_count;
        used[static_cast<std::size_t>(v)] = false;
        set.pop_back();
      }
    };
    extend(lo);
  };
  next_box(0);
  return result;
}

ExactInt lenart_rhs(const Partition& lam, long long rho) {
  if (rho < 0) throw std::invalid_argument("lenart_rhs: negative rho");
  const Parts nu = trimmed(conjugate(lam));
  const std::size_t len = nu.size() + static_cast<std::size_t>(rho);
  Parts base(nu);
  base.resize(len, 0);

  ExactInt total = 0;
  Parts delta(len, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
    if (i == len) {
      if (left != 0) return;
      Parts plus(len);
      for (std::size_t k = 0; k < len; ++k) plus[k] = base[k] + delta[k];
      for (std::size_t k = 0; k + 1 < len; ++k)
        if (plus[k] < plus[k + 1]) return;
      Partition nu_plus(plus);
      ExactInt g = count_row_indexed_strict(nu_plus, Partition(base));
      if (g == 0) return;
      total += g * count_standard(SkewRef(nu_plus, Partition(Parts(len, 0))));
      return;
    }
    Part cap = std::min<Part>(static_cast<Part>(i), left); // row i+1 holds at most i new boxes
    for (Part d = 0; d <= cap; ++d) {
      delta[i] = d;
      rec(i + 1, left - d);
    }
    delta[i] = 0;
  };
  rec(0, rho);
  return total;
}

std::vector<Filling> enumerate_flagged_set_valued(const SkewRef& shape, const Flagging& flag,
                                                  long long max_total) {
  if (flag.bound.size() != shape.rows())
    throw std::invalid_argument("enumerate_flagged_set_valued: flag length mismatch");
  const auto cells = cells_of(shape);
  std::vector<Filling> result;
  std::map<Cell, std::vector<int>> cur;
  long long total = 0;

  std::function<void(std::size_t)> next_box = [&](std::size_t k) {
    if (k == cells.size()) {
      result.push_back(Filling{shape, cur});
      return;
    }
    const Cell c = cells[k];
    const Part hi = flag.bound[static_cast<std::size_t>(c.row - 1)];
    Part lo = 1;
    auto left = cur.find(Cell{c.row, c.col - 1});
    if (left != cur.end()) lo = std::max<Part>(lo, left->second.back()); // weak along rows
    auto above = cur.find(Cell{c.row - 1, c.col});
    if (above != cur.end()) lo = std::max<Part>(lo, above->second.back() + 1); // strict down

    std::vector<int> set;
    std::function<void(Part)> extend = [&](Part from) {
      if (!set.empty()) {
        long long remaining_boxes = static_cast<long long>(cells.size() - k - 1);
        if (max_total < 0 || total + remaining_boxes <= max_total) {
          cur[c] = set;
          next_box(k + 1);
          cur.erase(c);
        }
      }
      for (Part v = from; v <= hi; ++v) {
        if (max_total >= 0 && total + 1 + static_cast<long long>(cells.size() - k - 1) > max_total)
          break;
        set.push_back(static_cast<int>(v));
        ++total;
        extend(v + 1);
        --total;
        set.pop_back();
      }
    };
    extend(lo);
  };
  next_box(0);
  return result;
}

} // namespace skewdet
