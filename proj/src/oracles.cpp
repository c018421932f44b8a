#include "skewdet/oracles.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace skewdet {

namespace {

std::vector<int> trim_fixed_tail(const std::vector<int>& v) {
  std::vector<int> out = v;
  while (!out.empty() && out.back() == static_cast<int>(out.size())) out.pop_back();
  return out;
}

MultiPoly staircase_product(int n) {
  MultiPoly out(ExactInt(1));
  for (int i = 1; i + 1 <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      out = out * (MultiPoly::var_x(i) - MultiPoly::var_y(j));
  return out;
}

std::map<std::vector<int>, MultiPoly> g_schubert_memo;
std::mutex g_schubert_mutex;

MultiPoly schubert_of(const std::vector<int>& key) {
  {
    std::lock_guard<std::mutex> lock(g_schubert_mutex);
    auto it = g_schubert_memo.find(key);
    if (it != g_schubert_memo.end()) return it->second;
  }
  MultiPoly value;
  if (key.empty()) {
    value = MultiPoly(ExactInt(1));
  } else {
    int ascent = 0;
    for (std::size_t i = 0; i + 1 < key.size(); ++i)
      if (key[i] < key[i + 1]) {
        ascent = static_cast<int>(i + 1);
        break;
      }
    if (ascent == 0) {
      value = staircase_product(static_cast<int>(key.size()));
    } else {
      std::vector<int> up = key;
      std::swap(up[static_cast<std::size_t>(ascent - 1)], up[static_cast<std::size_t>(ascent)]);
      value = schubert_of(trim_fixed_tail(up)).divided_difference(ascent);
    }
  }
  std::lock_guard<std::mutex> lock(g_schubert_mutex);
  g_schubert_memo.emplace(key, value);
  return value;
}

} // namespace

MultiPoly schubert_oracle(const Permutation& w) { return schubert_of(trim_fixed_tail(w.one_line)); }

namespace {

MultiPoly grothendieck_at_cap(const Permutation& w, bool double_vars, long long capv) {
  long long len = perm_length(w).get_si();
  auto dreams = enumerate_pipe_dreams(w, false, capv);
  // per-position double weight (x_i - y_j) * sum_s (-b y_j)^s, reused across dreams
  std::map<std::pair<int, int>, MultiPoly> weight;
  MultiPoly total;
  for (const PipeDream& dream : dreams) {
    long long extra = static_cast<long long>(dream.crosses.size()) - len;
    if (double_vars) {
      MultiPoly term(ExactInt(1));
      for (const auto& [i, j] : dream.crosses) {
        auto it = weight.find({i, j});
        if (it == weight.end()) {
          MultiPoly series;
          MultiPoly pw(ExactInt(1));
          MultiPoly step = MultiPoly(ExactInt(-1)) * MultiPoly::var_beta() * MultiPoly::var_y(j);
          for (long long s = 0; s <= capv; ++s) {
            series += pw;
            pw = pw.mul(step, capv, -1);
          }
          MultiPoly f = (MultiPoly::var_x(i) - MultiPoly::var_y(j)).mul(series, capv, -1);
          it = weight.emplace(std::make_pair(i, j), f).first;
        }
        term = term.mul(it->second, capv - extra, -1);
      }
      total += term.mul(MultiPoly::var_beta(static_cast<int>(extra)), capv, -1);
    } else {
      Mono m;
      for (const auto& [i, j] : dream.crosses) {
        if (m.xe.size() < static_cast<std::size_t>(i)) m.xe.resize(static_cast<std::size_t>(i), 0);
        m.xe[static_cast<std::size_t>(i - 1)] += 1;
      }
      m.be = static_cast<int>(extra);
      total.add_term(m, ExactInt(1));
    }
  }
  return total;
}

} // namespace

MultiPoly grothendieck_oracle(const Permutation& w, bool double_vars, DegreeCap cap) {
  if (cap.cap < 0) throw std::invalid_argument("grothendieck_oracle: negative cap");
  MultiPoly out = grothendieck_at_cap(w, double_vars, cap.cap);
  MultiPoly wider = grothendieck_at_cap(w, double_vars, cap.cap + 1);
  // single-variable sums are polynomials in beta, so the cap must capture
  // them whole; the double weights are honest series and only the reported
  // beta-window has to be stable
  if (double_vars) wider = wider.truncate_beta(cap.cap);
  if (!(wider == out)) throw std::runtime_error("grothendieck_oracle: truncation has not stabilized");
  return out;
}

namespace {

MultiPoly fsvt_at_cap(const Permutation& w, long long capv) {
  long long len = perm_length(w).get_si();
  LabeledSkew data = bjs_labeled_skew(w);
  auto fillings = enumerate_flagged_set_valued(data.shape, data.flag, len + capv);
  MultiPoly total;
  for (const Filling& t : fillings) {
    Mono m;
    long long entries = 0;
    for (const auto& [cell, values] : t.boxes)
      for (int v : values) {
        if (m.xe.size() < static_cast<std::size_t>(v)) m.xe.resize(static_cast<std::size_t>(v), 0);
        m.xe[static_cast<std::size_t>(v - 1)] += 1;
        ++entries;
      }
    m.be = static_cast<int>(entries - len);
    total.add_term(m, ExactInt(1));
  }
  return total;
}

} // namespace

MultiPoly fsvt_generating_function(const Permutation& w, DegreeCap cap) {
  if (cap.cap < 0) throw std::invalid_argument("fsvt_generating_function: negative cap");
  if (w.is_identity()) return MultiPoly(ExactInt(1));
  MultiPoly out = fsvt_at_cap(w, cap.cap);
  MultiPoly wider = fsvt_at_cap(w, cap.cap + 1);
  if (!(wider == out))
    throw std::runtime_error("fsvt_generating_function: truncation has not stabilized");
  return out;
}

namespace {

void monomials_of_degree(int n, int d, std::vector<int>& cur, std::vector<Mono>& out) {
  if (cur.size() + 1 == static_cast<std::size_t>(n)) {
    cur.push_back(d);
    out.emplace_back(cur, std::vector<int>{}, 0);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur.push_back(e);
    monomials_of_degree(n, d - e, cur, out);
    cur.pop_back();
  }
}

} // namespace

bool verify_lemma_powers(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("verify_lemma_powers: need 1 <= i <= n");
  long long dcap = n;
  // roots 1 - e^{-x_a}, truncated beyond degree n
  std::vector<QPoly> roots;
  for (int a = 1; a <= n; ++a) {
    QPoly s;
    for (long long k = 1; k <= n; ++k) {
      ExactRational c = make_rational(to_exact(k % 2 == 1 ? 1 : -1), factorial(k));
      s += QPoly(c) * QPoly::var_x(a, static_cast<int>(k));
    }
    roots.push_back(s);
  }
  auto elementary = [&](const std::vector<QPoly>& rs, bool capped) {
    std::vector<QPoly> e(static_cast<std::size_t>(i) + 1);
    e[0] = QPoly(ExactRational(1));
    for (const QPoly& r : rs)
      for (int d = i; d >= 1; --d)
        e[static_cast<std::size_t>(d)] +=
            e[static_cast<std::size_t>(d - 1)].mul(r, -1, capped ? dcap : -1);
    return e[static_cast<std::size_t>(i)];
  };
  std::vector<QPoly> plain;
  for (int a = 1; a <= n; ++a) plain.push_back(QPoly::var_x(a));
  QPoly diff = elementary(roots, true) - elementary(plain, false);

  for (long long d = 0; d <= dcap; ++d) {
    std::vector<Mono> basis;
    {
      std::vector<int> cur;
      monomials_of_degree(n, static_cast<int>(d), cur, basis);
    }
    std::map<Mono, std::size_t, MonoBefore> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    std::vector<ExactRational> target(basis.size(), ExactRational(0));
    bool any = false;
    for (const auto& [m, c] : diff.terms())
      if (m.degree() == d) {
        target[index.at(m)] = c;
        any = true;
      }
    if (!any) continue;
    // span of p_k * m for k = 2..n over monomials m of degree d - k
    std::vector<std::vector<ExactRational>> gens;
    for (int k = 2; k <= n; ++k) {
      if (d - k < 0) continue;
      QPoly pk;
      for (int a = 1; a <= n; ++a) pk += QPoly::var_x(a, k);
      std::vector<Mono> lower;
      std::vector<int> cur;
      monomials_of_degree(n, static_cast<int>(d) - k, cur, lower);
      for (const Mono& m : lower) {
        QPoly gen = pk;
        QPoly mono;
        mono.add_term(m, ExactRational(1));
        gen = gen * mono;
        std::vector<ExactRational> row(basis.size(), ExactRational(0));
        for (const auto& [mm, c] : gen.terms()) row[index.at(mm)] = c;
        gens.push_back(std::move(row));
      }
    }
    // echelonize the generators, then reduce the target against the pivots
    std::vector<std::pair<std::size_t, std::vector<ExactRational>>> pivots;
    auto reduce = [&](std::vector<ExactRational> v) {
      for (const auto& [pc, pr] : pivots)
        if (!(v[pc] == 0)) {
          ExactRational f = v[pc];
          for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * pr[c];
        }
      return v;
    };
    for (const auto& g : gens) {
      std::vector<ExactRational> v = reduce(g);
      std::size_t lead = v.size();
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!(v[c] == 0)) {
          lead = c;
          break;
        }
      if (lead == v.size()) continue;
      ExactRational inv = v[lead];
      for (auto& x : v) x /= inv;
      pivots.emplace_back(lead, std::move(v));
    }
    std::vector<ExactRational> rest = reduce(target);
    for (const auto& x : rest)
      if (!(x == 0)) return false;
  }
  return true;
}

} // namespace skewdet
