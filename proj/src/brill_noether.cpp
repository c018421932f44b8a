#include "skewdet/brill_noether.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewdet/fcount.hpp"
#include "skewdet/parallel.hpp"
#include "skewdet/tableaux.hpp"

namespace skewdet {

namespace {

void check_sequence(const Parts& s, long long r, long long d, const char* name) {
  if (static_cast<long long>(s.size()) != r + 1)
    throw std::invalid_argument(std::string(name) + ": need r+1 entries");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] > d)
      throw std::invalid_argument(std::string(name) + ": entries must lie in [0, d]");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string(name) + ": entries must strictly increase");
  }
}

} // namespace

BNInstance::BNInstance(long long g_, long long r_, long long d_, Parts a_, Parts b_)
    : g(g_), r(r_), d(d_), a(std::move(a_)), b(std::move(b_)) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  check_sequence(a, r, d, "a");
  check_sequence(b, r, d, "b");
}

long long bn_rho(const BNInstance& inst) {
  long long rho = inst.g;
  for (long long i = 0; i <= inst.r; ++i)
    rho -= inst.g - inst.d + inst.a[static_cast<std::size_t>(i)] +
           inst.b[static_cast<std::size_t>(inst.r - i)];
  return rho;
}

BNShapes bn_shapes(const BNInstance& inst, std::optional<long long> n_opt) {
  long long floor_n =
      std::max({2 * inst.g - 1 - inst.d + inst.b.back(), inst.g - inst.d + inst.b.back(), 0LL});
  long long n = n_opt.value_or(floor_n);
  if (n < floor_n) throw std::invalid_argument("bn_shapes: twist is below the non-special floor");
  Parts lam(static_cast<std::size_t>(inst.r + 1)), mu(static_cast<std::size_t>(inst.r + 1));
  for (long long i = 1; i <= inst.r + 1; ++i) {
    lam[static_cast<std::size_t>(i - 1)] =
        n + inst.a[static_cast<std::size_t>(inst.r + 1 - i)] - (inst.r + 1 - i);
    mu[static_cast<std::size_t>(i - 1)] =
        n - inst.b[static_cast<std::size_t>(i - 1)] + i - 1 - inst.g + inst.d - inst.r;
  }
  return BNShapes{n, Partition(lam), Partition(mu)};
}

namespace {

// all nonnegative vectors of the given length summing to total, entrywise
// bounded by *bound when present
void compositions_rec(long long total, std::size_t len, const Parts* bound, Parts& cur,
                      std::vector<Parts>& out) {
  if (cur.size() + 1 == len) {
    if (bound && total > (*bound)[cur.size()]) return;
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  long long hi = bound ? std::min(total, (*bound)[cur.size()]) : total;
  for (long long v = 0; v <= hi; ++v) {
    cur.push_back(v);
    compositions_rec(total - v, len, bound, cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> compositions(long long total, std::size_t len, const Parts* bound = nullptr) {
  std::vector<Parts> out;
  if (total < 0 || len == 0) return out;
  Parts cur;
  compositions_rec(total, len, bound, cur, out);
  return out;
}

// weakly decreasing vectors v with lam_i <= v_i, |v| = |lam| + extra
void outer_growths_rec(const Parts& lam, std::size_t i, long long prev, long long left, Parts& cur,
                       std::vector<Parts>& out) {
  if (i == lam.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (long long v = lam[i]; v <= std::min(prev, lam[i] + left); ++v) {
    cur.push_back(v);
    outer_growths_rec(lam, i + 1, v, left - (v - lam[i]), cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> outer_growths(const Parts& lam, long long extra) {
  std::vector<Parts> out;
  if (extra < 0) return out;
  Parts cur;
  outer_growths_rec(lam, 0, lam.empty() ? 0 : lam[0] + extra, extra, cur, out);
  return out;
}

// weakly decreasing vectors v with 0 <= v_i <= mu_i, |v| = |mu| - drop
void inner_shrinks_rec(const Parts& mu, std::size_t i, long long prev, long long left, Parts& cur,
                       std::vector<Parts>& out) {
  if (i == mu.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (long long v = std::min(mu[i], prev); v >= 0; --v) {
    long long dropped = mu[i] - v;
    if (dropped > left) break;
    cur.push_back(v);
    inner_shrinks_rec(mu, i + 1, v, left - dropped, cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> inner_shrinks(const Parts& mu, long long drop) {
  std::vector<Parts> out;
  if (drop < 0) return out;
  Parts cur;
  inner_shrinks_rec(mu, 0, mu.empty() ? 0 : mu[0], drop, cur, out);
  return out;
}

} // namespace

ExactInt euler_thm1(const BNInstance& inst, std::optional<long long> n, int jobs) {
  long long rho = bn_rho(inst);
  if (rho < 0) return ExactInt(0);
  BNShapes sh = bn_shapes(inst, n);
  const Parts& lam = sh.lam.parts;
  const Parts& mu = sh.mu.parts;
  std::size_t t = lam.size();
  // split rho between deficits on mu and excesses on lam
  std::vector<std::pair<Parts, Parts>> moves;
  for (long long s = 0; s <= rho; ++s)
    for (const Parts& deficit : compositions(s, t, &mu))
      for (const Parts& excess : compositions(rho - s, t))
        moves.emplace_back(deficit, excess);
  std::vector<ExactInt> partial(moves.size());
  parallel_for(moves.size(), jobs, [&](std::size_t idx) {
    const auto& [deficit, excess] = moves[idx];
    ExactInt coef(1);
    for (std::size_t i = 0; i < t; ++i) {
      coef *= binomial(to_exact(mu[i]), deficit[i]);
      if (coef == 0) return;
      coef *= binomial(to_exact(-lam[i]), excess[i]);
      if (coef == 0) return;
    }
    Parts l(t), m(t);
    for (std::size_t i = 0; i < t; ++i) {
      l[i] = lam[i] + excess[i];
      m[i] = mu[i] - deficit[i];
    }
    partial[idx] = coef * f_det(l, m);
  });
  ExactInt chi(0);
  for (const ExactInt& v : partial) chi += v;
  return chi;
}

ExactInt euler_tableau(const BNInstance& inst, std::optional<long long> n) {
  long long rho = bn_rho(inst);
  if (rho < 0) return ExactInt(0);
  BNShapes sh = bn_shapes(inst, n);
  const Parts& lam = sh.lam.parts;
  const Parts& mu = sh.mu.parts;
  ExactInt chi(0);
  for (long long e = 0; e <= rho; ++e) {
    ExactInt sign = e % 2 == 0 ? ExactInt(1) : ExactInt(-1);
    for (const Parts& lam_plus : outer_growths(lam, e)) {
      ExactInt zeta = zeta_determinant(Partition(lam_plus), sh.lam);
      if (zeta == 0) continue;
      for (const Parts& mu_minus : inner_shrinks(mu, rho - e)) {
        ExactInt alpha = alpha_determinant(sh.mu, Partition(mu_minus));
        if (alpha == 0) continue;
        chi += sign * alpha * zeta * f_det(lam_plus, mu_minus);
      }
    }
  }
  return chi;
}

ExactInt clpt_check(const BNInstance& inst) {
  if (bn_rho(inst) != 1) throw std::invalid_argument("clpt_check: needs rho = 1");
  BNShapes sh = bn_shapes(inst);
  const Parts& lam = sh.lam.parts;
  const Parts& mu = sh.mu.parts;
  long long t = static_cast<long long>(lam.size());
  ExactInt chi(0);
  ExactInt lhs_check(0);
  for (long long i = 0; i < t; ++i) {
    Parts m = mu;
    m[static_cast<std::size_t>(i)] -= 1;
    ExactInt f_minus = f_det(lam, m);
    Parts l = lam;
    l[static_cast<std::size_t>(i)] += 1;
    ExactInt f_plus = f_det(l, mu);
    chi += to_exact(mu[static_cast<std::size_t>(i)]) * f_minus -
           to_exact(lam[static_cast<std::size_t>(i)]) * f_plus;
    lhs_check += to_exact(lam[static_cast<std::size_t>(i)] + t + 1 - (i + 1)) * f_plus -
                 to_exact(mu[static_cast<std::size_t>(i)] + t - (i + 1)) * f_minus;
  }
  long long size = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) size += lam[i] - mu[i];
  if (lhs_check != to_exact(t * (size + 1)) * f_det(lam, mu))
    throw std::logic_error("clpt_check: content identity failed");
  return chi;
}

namespace {

void require_standard_b(const BNInstance& inst, const char* who) {
  for (long long i = 0; i <= inst.r; ++i)
    if (inst.b[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument(std::string(who) + ": needs b = (0, ..., r)");
}

} // namespace

namespace {

// reduced one-pointed rows, possibly negative; the series sum below is total
// because 1/(negative)! vanishes
Parts one_pointed_rows(const BNInstance& inst, const char* who) {
  require_standard_b(inst, who);
  Parts lam(static_cast<std::size_t>(inst.r + 1));
  for (long long i = 1; i <= inst.r + 1; ++i)
    lam[static_cast<std::size_t>(i - 1)] =
        inst.g - inst.d + inst.a[static_cast<std::size_t>(inst.r + 1 - i)] + i - 1;
  return lam;
}

} // namespace

Partition one_pointed_shape(const BNInstance& inst) {
  Parts lam = one_pointed_rows(inst, "one_pointed_shape");
  for (long long v : lam)
    if (v < 0) throw std::invalid_argument("one_pointed_shape: negative row");
  return Partition(lam);
}

ExactInt one_pointed_euler(const BNInstance& inst) {
  long long g = inst.g;
  Parts lam = one_pointed_rows(inst, "one_pointed_euler");
  std::size_t t = lam.size();
  long long size = 0;
  for (long long v : lam) size += v;
  long long rho = g - size;
  if (rho < 0) return ExactInt(0);
  ExactRational chi(0);
  ExactInt gfact = factorial(g);
  for (const Parts& excess : compositions(rho, t)) {
    ExactInt coef(1);
    for (std::size_t i = 0; i < t; ++i) {
      coef *= binomial(to_exact(-lam[i]), excess[i]);
      if (coef == 0) break;
    }
    if (coef == 0) continue;
    Parts l(t);
    for (std::size_t i = 0; i < t; ++i) l[i] = lam[i] + excess[i];
    ExactInt vand(1);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j)
        vand *= to_exact(l[i] - l[j] + static_cast<long long>(j) - static_cast<long long>(i));
    ExactRational term = make_rational(coef * gfact * vand, ExactInt(1));
    for (std::size_t i = 0; i < t; ++i)
      term *= inv_factorial(l[i] + static_cast<long long>(t) - 1 - static_cast<long long>(i));
    chi += term;
  }
  return rational_to_integer(chi);
}

ExactInt one_pointed_rho1(const BNInstance& inst) {
  long long g = inst.g, r = inst.r, d = inst.d;
  const Parts& a = inst.a;
  Parts lam = one_pointed_shape(inst).parts;
  long long size = 0;
  for (long long v : lam) size += v;
  if (g - size != 1) throw std::invalid_argument("one_pointed_rho1: needs rho = 1");
  ExactRational chi(0);
  for (long long k = 0; k <= r; ++k) {
    long long weight = g - d + r + a[static_cast<std::size_t>(k)] - k;
    ExactInt num = to_exact(weight);
    for (long long i = 0; i <= r; ++i)
      for (long long j = i + 1; j <= r; ++j) {
        long long dk = (j == k ? 1 : 0) - (i == k ? 1 : 0);
        num *= to_exact(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)] + dk);
      }
    ExactRational term = make_rational(num, ExactInt(1));
    for (long long i = 0; i <= r; ++i)
      term *= inv_factorial(g - d + r + a[static_cast<std::size_t>(i)] + (i == k ? 1 : 0));
    chi += term;
  }
  chi *= make_rational(-factorial(g), ExactInt(1));
  return rational_to_integer(chi);
}

ExactInt chan_pflueger_count(const BNInstance& inst) {
  Partition lam = one_pointed_shape(inst);
  long long size = 0;
  for (long long v : lam.parts) size += v;
  long long rho = inst.g - size;
  if (rho < 0) return ExactInt(0);
  ExactInt count = count_rho_set_valued(lam, rho);
  return rho % 2 == 0 ? count : -count;
}

ExactInt classical_euler(long long g, long long r, long long d) {
  if (g < 0 || r < 0 || d < 0) throw std::invalid_argument("classical_euler: negative input");
  long long s = g - d + r;
  long long rho = g - (r + 1) * s;
  if (rho < 0 || rho > g) throw std::invalid_argument("classical_euler: rho outside [0, g]");
  std::size_t t = static_cast<std::size_t>(r + 1);
  Parts zeros(t, 0);
  ExactInt total(0);
  for (const Parts& gamma : outer_growths(zeros, rho)) {
    ExactInt fg = f_det(gamma, zeros);
    if (fg == 0) continue;
    ExactInt weight(1);
    for (std::size_t i = 0; i < t; ++i) {
      weight *= falling_factorial(to_exact(s + gamma[i] - static_cast<long long>(i) - 1), gamma[i]);
      if (weight == 0) break;
    }
    if (weight == 0) continue;
    Parts lam_gamma(t);
    for (std::size_t i = 0; i < t; ++i) lam_gamma[i] = s + gamma[i];
    total += fg * weight * f_det(lam_gamma, zeros);
  }
  if (rho % 2 == 1) total = -total;
  return rational_to_integer(make_rational(total, factorial(rho)));
}

ExactRational castelnuovo_prefactor(long long g, long long r, long long d) {
  ExactRational out = make_rational(factorial(g), ExactInt(1));
  for (long long i = 0; i <= r; ++i) {
    out *= make_rational(factorial(i), ExactInt(1));
    out *= inv_factorial(g - d + r + i);
  }
  return out;
}

ClosedFormValue closed_form_euler(long long g, long long r, long long d) {
  long long s = g - d + r;
  long long rho = g - (r + 1) * s;
  if (rho < 0 || rho > 3) throw std::invalid_argument("closed_form_euler: rho outside [0, 3]");
  if (rho > g) throw std::invalid_argument("closed_form_euler: rho exceeds g");
  ExactRational pre = castelnuovo_prefactor(g, r, d);
  ClosedFormValue out;
  ExactRational v;
  switch (rho) {
    case 0:
      v = pre;
      break;
    case 1:
      v = pre * make_rational(to_exact(-s * (r + 1)), to_exact(s + r + 1));
      break;
    case 2: {
      if (s + r == 0) {
        out.degenerate = true;
        return out;
      }
      ExactInt num = to_exact((r + 1) * (r + 1)) * to_exact(s) * to_exact(s);
      ExactInt den = to_exact(2) * to_exact(s + r) * to_exact(s + r + 2);
      v = pre * make_rational(num, den);
      break;
    }
    default: {
      if (s + r - 1 == 0 || s + r == 0) {
        out.degenerate = true;
        return out;
      }
      ExactInt bracket = to_exact(((r + s + 1) * (r + s + 1) - 2) * s * (r + 1) - 2);
      ExactInt num = to_exact(-(r + 1) * (r + 1)) * to_exact(s) * to_exact(s) * bracket;
      ExactInt den = to_exact(6) * to_exact(s + r - 1) * to_exact(s + r) * to_exact(s + r + 1) *
                     to_exact(s + r + 2) * to_exact(s + r + 3);
      v = pre * make_rational(num, den);
      break;
    }
  }
  out.value = rational_to_integer(v);
  return out;
}

ExactInt closed_form_s1(long long g, long long r, long long d) {
  if (g - d + r != 1) throw std::invalid_argument("closed_form_s1: needs g - d + r = 1");
  long long rho = g - r - 1;
  if (rho < 0) throw std::invalid_argument("closed_form_s1: rho negative");
  return binomial(to_exact(-r - 1), rho);
}

ClosedForms closed_forms(long long g, long long r, long long d) {
  ClosedForms out;
  out.s = g - d + r;
  out.rho = g - (r + 1) * out.s;
  out.rho_form_applies = out.rho >= 0 && out.rho <= 3 && out.rho <= g;
  out.s1_applies = out.s == 1 && out.rho >= 0;
  if (!out.rho_form_applies && !out.s1_applies)
    throw std::invalid_argument("closed_forms: no closed-form regime applies");
  if (out.rho_form_applies) out.rho_form = closed_form_euler(g, r, d);
  if (out.s1_applies) out.s1_value = closed_form_s1(g, r, d);
  return out;
}

Parts a_prime(const BNInstance& inst) {
  Parts out(inst.a.size());
  for (long long i = 0; i <= inst.r; ++i) {
    long long slack = inst.d - inst.g - inst.a[static_cast<std::size_t>(i)] -
                      inst.b[static_cast<std::size_t>(inst.r - i)];
    out[static_cast<std::size_t>(i)] =
        inst.a[static_cast<std::size_t>(i)] + std::max(0LL, slack);
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] >= out[i + 1]) throw std::logic_error("a_prime: sequence not strictly increasing");
  return out;
}

std::pair<long long, bool> nonempty_criterion(const BNInstance& inst) {
  long long rho_prime = inst.g;
  for (long long i = 0; i <= inst.r; ++i)
    rho_prime -= std::max(0LL, inst.a[static_cast<std::size_t>(i)] +
                                   inst.b[static_cast<std::size_t>(inst.r - i)] + inst.g - inst.d);
  return {rho_prime, rho_prime >= 0};
}

ExactRational numclass_coefficient(const BNInstance& inst) {
  std::size_t t = static_cast<std::size_t>(inst.r + 1);
  std::vector<std::vector<Part>> args(t, std::vector<Part>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      args[i][j] = inst.a[static_cast<std::size_t>(inst.r) - i] + inst.b[j] + inst.g - inst.d;
  return factorial_determinant(args);
}

} // namespace skewdet
