#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdet/exact.hpp"

namespace skewdet {

// Exponents for x_1..x_N, y_1..y_M and the deformation variable b.
// Trailing zeros are trimmed so equal monomials compare equal.
struct Mono {
  std::vector<int> xe, ye;
  int be = 0;

  Mono() = default;
  Mono(std::vector<int> x, std::vector<int> y, int b) : xe(std::move(x)), ye(std::move(y)), be(b) {
    trim();
  }

  void trim() {
    while (!xe.empty() && xe.back() == 0) xe.pop_back();
    while (!ye.empty() && ye.back() == 0) ye.pop_back();
  }

  long long degree() const {
    long long d = be;
    for (int e : xe) d += e;
    for (int e : ye) d += e;
    return d;
  }

  bool operator==(const Mono&) const = default;
};

inline int exponent_at(const std::vector<int>& v, std::size_t i) {
  return i < v.size() ? v[i] : 0;
}

// Canonical print order: higher total degree first, ties by higher exponent
// on the earlier variable, x's before y's before b.
struct MonoBefore {
  bool operator()(const Mono& a, const Mono& b) const {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    std::size_t nx = std::max(a.xe.size(), b.xe.size());
    for (std::size_t i = 0; i < nx; ++i) {
      int ax = exponent_at(a.xe, i), bx = exponent_at(b.xe, i);
      if (ax != bx) return ax > bx;
    }
    std::size_t ny = std::max(a.ye.size(), b.ye.size());
    for (std::size_t i = 0; i < ny; ++i) {
      int ay = exponent_at(a.ye, i), by = exponent_at(b.ye, i);
      if (ay != by) return ay > by;
    }
    return a.be > b.be;
  }
};

template <typename C>
class BasePoly {
public:
  using Terms = std::map<Mono, C, MonoBefore>;

  BasePoly() = default;
  explicit BasePoly(const C& c) {
    if (!(c == 0)) terms_[Mono{}] = c;
  }

  static BasePoly var_x(int i, int e = 1) { return from_var(i, e, 0); }
  static BasePoly var_y(int j, int e = 1) { return from_var(j, e, 1); }
  static BasePoly var_beta(int e = 1) { return from_var(0, e, 2); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const BasePoly&) const = default;

  void add_term(const Mono& m, const C& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasePoly operator+(const BasePoly& o) const {
    BasePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  BasePoly& operator+=(const BasePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasePoly operator-() const {
    BasePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  BasePoly operator-(const BasePoly& o) const {
    BasePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  // beta_cap / degree_cap drop product terms above the bound; -1 disables.
  BasePoly mul(const BasePoly& o, long long beta_cap, long long degree_cap) const {
    BasePoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        int be = ma.be + mb.be;
        if (beta_cap >= 0 && be > beta_cap) continue;
        if (degree_cap >= 0 && ma.degree() + mb.degree() > degree_cap) continue;
        Mono m;
        m.xe.resize(std::max(ma.xe.size(), mb.xe.size()));
        for (std::size_t i = 0; i < m.xe.size(); ++i)
          m.xe[i] = exponent_at(ma.xe, i) + exponent_at(mb.xe, i);
        m.ye.resize(std::max(ma.ye.size(), mb.ye.size()));
        for (std::size_t i = 0; i < m.ye.size(); ++i)
          m.ye[i] = exponent_at(ma.ye, i) + exponent_at(mb.ye, i);
        m.be = be;
        r.add_term(m, ca * cb);
      }
    return r;
  }
  BasePoly operator*(const BasePoly& o) const { return mul(o, -1, -1); }

  BasePoly truncate_beta(long long cap) const { return filtered([&](const Mono& m) { return m.be <= cap; }); }
  BasePoly truncate_degree(long long cap) const {
    return filtered([&](const Mono& m) { return m.degree() <= cap; });
  }
  BasePoly at_beta_zero() const { return filtered([](const Mono& m) { return m.be == 0; }); }
  BasePoly at_y_zero() const { return filtered([](const Mono& m) { return m.ye.empty(); }); }

  long long beta_degree() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max<long long>(d, m.be);
    return d;
  }

  C coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  // exchange x_i and x_{i+1}, 1-based
  BasePoly swap_x(int i) const {
    BasePoly r;
    for (const auto& [m, c] : terms_) {
      Mono s = m;
      if (s.xe.size() < static_cast<std::size_t>(i + 1)) s.xe.resize(static_cast<std::size_t>(i + 1), 0);
      std::swap(s.xe[static_cast<std::size_t>(i - 1)], s.xe[static_cast<std::size_t>(i)]);
      s.trim();
      r.add_term(s, c);
    }
    return r;
  }

  // (f - s_i f)/(x_i - x_{i+1}) by synthetic division in x_i; the division
  // is exact because the numerator is antisymmetric in x_i, x_{i+1}.
  BasePoly divided_difference(int i) const {
    BasePoly g = *this - swap_x(i);
    if (g.is_zero()) return g;
    int top = 0;
    for (const auto& [m, c] : g.terms_)
      top = std::max(top, exponent_at(m.xe, static_cast<std::size_t>(i - 1)));
    std::vector<BasePoly> cs(static_cast<std::size_t>(top) + 1);
    for (const auto& [m, c] : g.terms_) {
      Mono s = m;
      if (s.xe.size() >= static_cast<std::size_t>(i)) s.xe[static_cast<std::size_t>(i - 1)] = 0;
      s.trim();
      cs[static_cast<std::size_t>(exponent_at(m.xe, static_cast<std::size_t>(i - 1)))].add_term(s, c);
    }
    BasePoly s_next = var_x(i + 1);
    BasePoly q = cs[static_cast<std::size_t>(top)]; // quotient coefficient of x_i^{top-1}
    BasePoly out = q * var_x(i, top - 1);
    for (int a = top - 1; a >= 1; --a) {
      q = cs[static_cast<std::size_t>(a)] + s_next * q;
      out += a == 1 ? q : q * var_x(i, a - 1);
    }
    BasePoly rem = cs[0] + s_next * q;
    if (!rem.is_zero()) throw std::logic_error("divided_difference: nonzero remainder");
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      C a = c;
      bool neg = a < 0;
      if (neg) a = -a;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string vars = mono_str(m);
      if (vars.empty()) {
        out += coef_str(a);
      } else {
        if (!(a == 1)) out += coef_str(a) + "*";
        out += vars;
      }
      first = false;
    }
    return out;
  }

private:
  Terms terms_;

  static BasePoly from_var(int idx, int e, int which) {
    BasePoly r;
    if (e < 0) throw std::invalid_argument("negative exponent");
    Mono m;
    if (e > 0) {
      if (which == 0) {
        m.xe.resize(static_cast<std::size_t>(idx), 0);
        m.xe[static_cast<std::size_t>(idx - 1)] = e;
      } else if (which == 1) {
        m.ye.resize(static_cast<std::size_t>(idx), 0);
        m.ye[static_cast<std::size_t>(idx - 1)] = e;
      } else {
        m.be = e;
      }
    }
    r.terms_[m] = C(1);
    return r;
  }

  template <typename F>
  BasePoly filtered(F keep) const {
    BasePoly r;
    for (const auto& [m, c] : terms_)
      if (keep(m)) r.terms_.emplace(m, c);
    return r;
  }

  static std::string coef_str(const C& c) { return c.get_str(); }

  static std::string mono_str(const Mono& m) {
    std::string s;
    auto piece = [&s](const char* name, int idx, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += name;
      if (idx > 0) s += std::to_string(idx);
      if (e > 1) s += "^" + std::to_string(e);
    };
    for (std::size_t i = 0; i < m.xe.size(); ++i) piece("x", static_cast<int>(i + 1), m.xe[i]);
    for (std::size_t i = 0; i < m.ye.size(); ++i) piece("y", static_cast<int>(i + 1), m.ye[i]);
    piece("b", 0, m.be);
    return s;
  }
};

using MultiPoly = BasePoly<ExactInt>;
using QPoly = BasePoly<ExactRational>;

} // namespace skewdet
