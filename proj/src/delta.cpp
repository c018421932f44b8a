#include "skewdet/delta.hpp"

#include <stdexcept>

namespace skewdet {

namespace {

// x/(1+bx) resp. y/(1+by) expanded to the given b-degree
MultiPoly deformed_var(const MultiPoly& v, long long bcap) {
  MultiPoly out;
  MultiPoly term = v;
  MultiPoly step = MultiPoly(ExactInt(-1)) * BasePoly<ExactInt>::var_beta() * v;
  for (long long s = 0; s <= bcap; ++s) {
    out += term;
    term = term.mul(step, bcap, -1);
  }
  return out;
}

std::vector<MultiPoly> make_roots(bool is_x, long long count, CMode mode, long long bcap) {
  std::vector<MultiPoly> roots;
  for (long long a = 1; a <= count; ++a) {
    MultiPoly v = is_x ? MultiPoly::var_x(static_cast<int>(a)) : MultiPoly::var_y(static_cast<int>(a));
    roots.push_back(mode == CMode::k_theory ? deformed_var(v, bcap) : v);
  }
  return roots;
}

// complete homogeneous sums of the roots, degrees 0..kmax
std::vector<MultiPoly> homogeneous_sums(const std::vector<MultiPoly>& roots, long long kmax,
                                        long long bcap) {
  std::vector<MultiPoly> h(static_cast<std::size_t>(kmax) + 1);
  h[0] = MultiPoly(ExactInt(1));
  for (const MultiPoly& r : roots) {
    std::vector<MultiPoly> pw(static_cast<std::size_t>(kmax) + 1);
    pw[0] = MultiPoly(ExactInt(1));
    for (long long s = 1; s <= kmax; ++s)
      pw[static_cast<std::size_t>(s)] = pw[static_cast<std::size_t>(s - 1)].mul(r, bcap, -1);
    std::vector<MultiPoly> next(static_cast<std::size_t>(kmax) + 1);
    for (long long d = 0; d <= kmax; ++d)
      for (long long s = 0; s <= d; ++s)
        next[static_cast<std::size_t>(d)] +=
            h[static_cast<std::size_t>(d - s)].mul(pw[static_cast<std::size_t>(s)], bcap, -1);
    h = std::move(next);
  }
  return h;
}

std::vector<MultiPoly> elementary_sums(const std::vector<MultiPoly>& roots, long long kmax,
                                       long long bcap) {
  std::vector<MultiPoly> e(static_cast<std::size_t>(kmax) + 1);
  e[0] = MultiPoly(ExactInt(1));
  for (const MultiPoly& r : roots)
    for (long long d = kmax; d >= 1; --d)
      e[static_cast<std::size_t>(d)] += e[static_cast<std::size_t>(d - 1)].mul(r, bcap, -1);
  return e;
}

} // namespace

MultiPoly c_coeff(const CMatrixSpec& spec, std::size_t i, std::size_t j, long long k,
                  DegreeCap cap) {
  if (i < 1 || i > spec.q.size() || j < 1 || j > spec.p.size())
    throw std::invalid_argument("c_coeff: index out of range");
  if (k < 0) return MultiPoly();
  if (k == 0) return MultiPoly(ExactInt(1));
  long long bcap = spec.mode == CMode::k_theory ? cap.cap : -1;
  auto xs = make_roots(true, spec.p[j - 1], spec.mode, bcap);
  auto ys = make_roots(false, spec.q[i - 1], spec.mode, bcap);
  auto h = homogeneous_sums(xs, k, bcap);
  auto e = elementary_sums(ys, k, bcap);
  MultiPoly out;
  ExactInt sign(1);
  for (long long b = 0; b <= k; ++b) {
    out += MultiPoly(sign).mul(e[static_cast<std::size_t>(b)], bcap, -1)
               .mul(h[static_cast<std::size_t>(k - b)], bcap, -1);
    sign = -sign;
  }
  return out;
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  std::size_t t = m.size();
  if (t == 0) return MultiPoly(ExactInt(1));
  for (const auto& row : m)
    if (row.size() != t) throw std::invalid_argument("poly_determinant: not square");
  // Laplace expansion along the first remaining row, recursing on column sets
  std::vector<std::size_t> cols(t);
  for (std::size_t j = 0; j < t; ++j) cols[j] = j;
  struct Rec {
    const std::vector<std::vector<MultiPoly>>& m;
    MultiPoly run(std::size_t row, std::vector<std::size_t>& cols) {
      if (cols.empty()) return MultiPoly(ExactInt(1));
      MultiPoly det;
      for (std::size_t jj = 0; jj < cols.size(); ++jj) {
        std::size_t col = cols[jj];
        if (m[row][col].is_zero()) continue;
        std::vector<std::size_t> rest = cols;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(jj));
        MultiPoly minor = run(row + 1, rest);
        MultiPoly term = m[row][col] * minor;
        det += (jj % 2 == 0) ? term : -term;
      }
      return det;
    }
  } rec{m};
  return rec.run(0, cols);
}

namespace {

MultiPoly delta_at_cap(const Partition& lam, const Partition& mu, const CMatrixSpec& spec,
                       bool beta_on, long long capv) {
  std::size_t t = lam.parts.size();
  DegreeCap cap{capv};
  std::vector<std::vector<MultiPoly>> m(t, std::vector<MultiPoly>(t));
  for (std::size_t i = 1; i <= t; ++i)
    for (std::size_t j = 1; j <= t; ++j) {
      long long a = lam.parts[i - 1] - mu.parts[j - 1];
      long long base = a + static_cast<long long>(j) - static_cast<long long>(i);
      MultiPoly entry = c_coeff(spec, i, j, base, cap);
      if (beta_on) {
        for (long long k = 1; k <= capv; ++k) {
          ExactInt coef = binomial(to_exact(a + k - 1), k);
          if (coef == 0) continue;
          MultiPoly piece = MultiPoly(coef) * MultiPoly::var_beta(static_cast<int>(k));
          entry += piece.mul(c_coeff(spec, i, j, base + k, cap), capv, -1);
        }
      }
      m[i - 1][j - 1] = entry;
    }
  MultiPoly det = poly_determinant(m);
  return beta_on ? det.truncate_beta(capv) : det;
}

} // namespace

MultiPoly delta_determinant(const Partition& lam, const Partition& mu, const CMatrixSpec& spec,
                            bool beta_on, DegreeCap cap) {
  if (lam.parts.size() != mu.parts.size())
    throw std::invalid_argument("delta_determinant: length mismatch");
  std::size_t t = lam.parts.size();
  if (spec.p.size() != t || spec.q.size() != t)
    throw std::invalid_argument("delta_determinant: bound count mismatch");
  if (cap.cap < 0) throw std::invalid_argument("delta_determinant: negative cap");
  MultiPoly out = delta_at_cap(lam, mu, spec, beta_on, cap.cap);
  if (beta_on) {
    // the k-sum is an honest power series in beta, so "stabilized" means the
    // reported window no longer moves when the internal caps grow
    MultiPoly wider = delta_at_cap(lam, mu, spec, beta_on, cap.cap + 1);
    if (!(wider.truncate_beta(cap.cap) == out))
      throw std::runtime_error("delta_determinant: truncation has not stabilized");
  }
  return out;
}

} // namespace skewdet
