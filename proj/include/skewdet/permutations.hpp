#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "skewdet/exact.hpp"
#include "skewdet/shapes.hpp"
#include "skewdet/tableaux.hpp"

namespace skewdet {

struct Permutation {
  std::vector<int> one_line; // w(i) = one_line[i-1]

  Permutation() = default;
  explicit Permutation(std::vector<int> w); // validates bijection on {1..n}

  int n() const { return static_cast<int>(one_line.size()); }
  // 1-based; acts as the identity beyond n
  int operator()(int i) const {
    return i >= 1 && i <= n() ? one_line[static_cast<std::size_t>(i - 1)] : i;
  }
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
};

// Same function on positive integers, ignoring trailing fixed points.
bool same_permutation(const Permutation& u, const Permutation& w);

std::vector<Permutation> symmetric_group(int n);

// Excedance data: w(p_i) = max{q_i+1, p_i}, other positions filled with the
// unused values in increasing order.
struct PQData {
  Parts p, q; // strictly decreasing, positive

  PQData(Parts p_, Parts q_); // validates
  std::size_t t() const { return p.size(); }
};

struct LabeledSkew {
  SkewRef shape;             // eta/tau, the 180-degree rotation of lam/mu
  std::map<Cell, int> labels; // drop by one along rows, grow by one down columns
  Flagging flag;             // row bounds f_i
  Parts e;                   // e_i = w(f_i) - 1
};

struct PipeDream {
  std::set<std::pair<int, int>> crosses; // (row, col), positive quadrant
  auto operator<=>(const PipeDream&) const = default;
};

Permutation perm_from_pq(const PQData& pq);
bool is_321_avoiding(const Permutation& w);

// Canonical inverse: p = positions with w(p) > p, decreasing; q_i = w(p_i)-1.
// Rejects the identity and non-321-avoiding input.
PQData pq_from_perm(const Permutation& w);

// q'_i = max{q_i, p_i - 1}; same permutation, and (p, q') has q'_i >= p_i - 1.
PQData q_prime(const PQData& pq);

// lam_i = q_i - t + i, mu_j = p_j - (t+1-j), 1-based.
std::pair<Partition, Partition> shape_from_pq(const PQData& pq);

ExactInt perm_length(const Permutation& w);

LabeledSkew bjs_labeled_skew(const Permutation& w);

// Hecke product of the crossing letters s_{i+j-1}, rows top to bottom, each
// row right to left; a letter that would shorten the product is absorbed.
Permutation demazure_of_dream(const PipeDream& P, int n);

// All dreams in the staircase {i+j <= n} whose Hecke product is w, with
// length(w) crosses (reduced_only) or up to length(w)+max_extra.
std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w, bool reduced_only,
                                             long long max_extra);

// Entry v in box b of a flagged set-valued filling of sigma(w) becomes a
// cross at (v, omega(b)-v+1).
PipeDream tableau_to_pipe_dream(const Permutation& w, const Filling& T);

} // namespace skewdet
