#include "skewdet/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewdet {

Permutation::Permutation(std::vector<int> w) : one_line(std::move(w)) {
  std::vector<bool> seen(one_line.size(), false);
  for (int v : one_line) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Permutation: not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool same_permutation(const Permutation& u, const Permutation& w) {
  int m = std::max(u.n(), w.n());
  for (int i = 1; i <= m; ++i)
    if (u(i) != w(i)) return false;
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

PQData::PQData(Parts p_, Parts q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p.size() != q.size() || p.empty())
    throw std::invalid_argument("PQData: p and q must be nonempty of equal length");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || q[i] < 1) throw std::invalid_argument("PQData: entries must be positive");
    if (i + 1 < p.size() && (p[i] <= p[i + 1] || q[i] <= q[i + 1]))
      throw std::invalid_argument("PQData: sequences must strictly decrease");
  }
}

Permutation perm_from_pq(const PQData& pq) {
  int n = 0;
  for (std::size_t i = 0; i < pq.t(); ++i)
    n = std::max(n, static_cast<int>(std::max(pq.p[i], pq.q[i] + 1)));
  std::vector<int> line(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < pq.t(); ++i) {
    int pos = static_cast<int>(pq.p[i]);
    int val = static_cast<int>(std::max(pq.q[i] + 1, pq.p[i]));
    line[static_cast<std::size_t>(pos - 1)] = val;
    used[static_cast<std::size_t>(val - 1)] = true;
  }
  int next = 1;
  for (int pos = 1; pos <= n; ++pos) {
    if (line[static_cast<std::size_t>(pos - 1)] != 0) continue;
    while (used[static_cast<std::size_t>(next - 1)]) ++next;
    line[static_cast<std::size_t>(pos - 1)] = next;
    used[static_cast<std::size_t>(next - 1)] = true;
  }
  return Permutation(line);
}

bool is_321_avoiding(const Permutation& w) {
  int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) <= w(j)) continue;
      for (int k = j + 1; k <= n; ++k)
        if (w(j) > w(k)) return false;
    }
  return true;
}

PQData pq_from_perm(const Permutation& w) {
  if (!is_321_avoiding(w)) throw std::invalid_argument("pq_from_perm: w contains 321");
  Parts p, q;
  for (int i = w.n(); i >= 1; --i) {
    if (w(i) > i) {
      p.push_back(i);
      q.push_back(w(i) - 1);
    }
  }
  if (p.empty()) throw std::invalid_argument("pq_from_perm: identity has no excedances");
  return PQData(std::move(p), std::move(q));
}

PQData q_prime(const PQData& pq) {
  Parts q2(pq.t());
  for (std::size_t i = 0; i < pq.t(); ++i) q2[i] = std::max(pq.q[i], pq.p[i] - 1);
  return PQData(pq.p, std::move(q2));
}

std::pair<Partition, Partition> shape_from_pq(const PQData& pq) {
  const Part t = static_cast<Part>(pq.t());
  Parts lam(pq.t()), mu(pq.t());
  for (Part i = 1; i <= t; ++i) {
    lam[static_cast<std::size_t>(i - 1)] = pq.q[static_cast<std::size_t>(i - 1)] - t + i;
    mu[static_cast<std::size_t>(i - 1)] = pq.p[static_cast<std::size_t>(i - 1)] - (t + 1 - i);
  }
  return {Partition(std::move(lam)), Partition(std::move(mu))};
}

ExactInt perm_length(const Permutation& w) {
  long long inv = 0;
  for (int a = 1; a <= w.n(); ++a)
    for (int b = a + 1; b <= w.n(); ++b)
      if (w(a) > w(b)) ++inv;
  return to_exact(inv);
}

LabeledSkew bjs_labeled_skew(const Permutation& w) {
  PQData pq = pq_from_perm(w);
  auto [lam, mu] = shape_from_pq(pq);
  const std::size_t t = pq.t();
  const Part lam1 = lam[0];
  Parts eta(t), tau(t), f(t), e(t);
  for (std::size_t i = 0; i < t; ++i) {
    eta[i] = lam1 - mu[t - 1 - i];
    tau[i] = lam1 - lam[t - 1 - i];
    f[i] = pq.p[t - 1 - i];
    e[i] = pq.q[t - 1 - i];
  }
  LabeledSkew out;
  out.shape = SkewRef(Partition(eta), Partition(tau));
  for (const Cell& c : cells_of(out.shape))
    out.labels[c] = static_cast<int>(lam1 + c.row - c.col);
  out.flag = Flagging{std::move(f)};
  out.e = std::move(e);
  return out;
}

Permutation demazure_of_dream(const PipeDream& P, int n) {
  int m = n;
  for (const auto& [i, j] : P.crosses) m = std::max(m, i + j);
  std::vector<int> line(static_cast<std::size_t>(m));
  std::iota(line.begin(), line.end(), 1);
  // rows top to bottom, right to left: sort by (row, -col)
  std::vector<std::pair<int, int>> order(P.crosses.begin(), P.crosses.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  for (const auto& [i, j] : order) {
    int a = i + j - 1;
    if (line[static_cast<std::size_t>(a - 1)] < line[static_cast<std::size_t>(a)])
      std::swap(line[static_cast<std::size_t>(a - 1)], line[static_cast<std::size_t>(a)]);
  }
  return Permutation(line);
}

std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w, bool reduced_only,
                                             long long max_extra) {
  const int n = w.n();
  if (n > 7) throw std::invalid_argument("enumerate_pipe_dreams: staircase bound is n <= 7");
  std::vector<std::pair<int, int>> boxes;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) boxes.emplace_back(i, j);
  const std::size_t nb = boxes.size();
  long long len = perm_length(w).get_si();
  long long lo = len, hi = reduced_only ? len : len + std::max<long long>(0, max_extra);

  std::vector<PipeDream> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nb); ++mask) {
    int bits = __builtin_popcountll(mask);
    if (bits < lo || bits > hi) continue;
    PipeDream P;
    for (std::size_t k = 0; k < nb; ++k)
      if (mask >> k & 1) P.crosses.insert(boxes[k]);
    if (same_permutation(demazure_of_dream(P, n), w)) out.push_back(std::move(P));
  }
  return out;
}

PipeDream tableau_to_pipe_dream(const Permutation& w, const Filling& T) {
  LabeledSkew ls = bjs_labeled_skew(w);
  if (!(T.shape == ls.shape))
    throw std::invalid_argument("tableau_to_pipe_dream: shape mismatch");
  PipeDream P;
  for (const auto& [cell, set] : T.boxes) {
    int omega = ls.labels.at(cell);
    Part bound = ls.flag.bound[static_cast<std::size_t>(cell.row - 1)];
    for (int v : set) {
      if (v < 1 || v > bound)
        throw std::invalid_argument("tableau_to_pipe_dream: entry violates the flagging");
      auto [it, fresh] = P.crosses.insert({v, omega - v + 1});
      if (!fresh) throw std::logic_error("tableau_to_pipe_dream: duplicate cross");
    }
  }
  return P;
}

} // namespace skewdet
