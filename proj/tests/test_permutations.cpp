#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "skewdet/permutations.hpp"

using namespace skewdet;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

} // namespace

TEST_CASE("permutation construction from excedance data") {
  CHECK(perm_from_pq(PQData({5, 4, 1}, {5, 2, 1})) == P({2, 1, 3, 4, 6, 5}));
  CHECK(perm_from_pq(PQData({4, 1}, {4, 2})) == P({3, 1, 2, 5, 4}));
  CHECK(perm_from_pq(PQData({1}, {1})) == P({2, 1}));
}

TEST_CASE("pattern avoidance") {
  CHECK(is_321_avoiding(P({3, 1, 2, 5, 4})));
  CHECK_FALSE(is_321_avoiding(P({3, 2, 1})));
  CHECK(is_321_avoiding(P({1, 2, 3, 4})));
  CHECK_FALSE(is_321_avoiding(P({1, 4, 3, 2})));
}

TEST_CASE("canonical excedance data") {
  {
    PQData pq = pq_from_perm(P({3, 1, 2, 5, 4}));
    CHECK(pq.p == Parts{4, 1});
    CHECK(pq.q == Parts{4, 2});
  }
  {
    PQData pq = pq_from_perm(P({2, 1}));
    CHECK(pq.p == Parts{1});
    CHECK(pq.q == Parts{1});
  }
  {
    PQData pq = pq_from_perm(P({1, 3, 2}));
    CHECK(pq.p == Parts{2});
    CHECK(pq.q == Parts{2});
  }
  CHECK_THROWS(pq_from_perm(P({1, 2, 3})));
  CHECK_THROWS(pq_from_perm(P({3, 2, 1})));
}

TEST_CASE("q adjustment") {
  PQData adj = q_prime(PQData({5, 4, 1}, {5, 2, 1}));
  CHECK(adj.q == Parts{5, 3, 1});
  CHECK(same_permutation(perm_from_pq(adj), perm_from_pq(PQData({5, 4, 1}, {5, 2, 1}))));
  CHECK(q_prime(PQData({2}, {1})).q == Parts{1});
  CHECK(q_prime(PQData({4, 1}, {4, 2})).q == Parts{4, 2});
}

TEST_CASE("shape extraction") {
  {
    auto [lam, mu] = shape_from_pq(PQData({4, 1}, {4, 2}));
    CHECK(lam == Partition({3, 2}));
    CHECK(mu == Partition({2, 0}));
  }
  {
    auto [lam, mu] = shape_from_pq(PQData({1}, {1}));
    CHECK(lam == Partition({1}));
    CHECK(mu == Partition({0}));
  }
  {
    // w = 2 3 1 has length 2, so |lam/mu| must be 2
    auto [lam, mu] = shape_from_pq(PQData({2, 1}, {2, 1}));
    CHECK(lam == Partition({1, 1}));
    CHECK(mu == Partition({0, 0}));
  }
}

TEST_CASE("length") {
  CHECK(perm_length(P({3, 1, 2, 5, 4})) == 3);
  CHECK(perm_length(P({1, 2, 3})) == 0);
  CHECK(perm_length(P({2, 1, 3, 4, 6, 5})) == 2);
}

TEST_CASE("construction always avoids 321 and round-trips") {
  for (Part p1 = 1; p1 <= 6; ++p1)
    for (Part q1 = 1; q1 <= 6; ++q1) {
      // all strictly decreasing pairs starting at (p1, q1), up to length 3
      std::vector<std::pair<Parts, Parts>> datas = {{{p1}, {q1}}};
      for (Part p2 = 1; p2 < p1; ++p2)
        for (Part q2 = 1; q2 < q1; ++q2) {
          datas.push_back({{p1, p2}, {q1, q2}});
          for (Part p3 = 1; p3 < p2; ++p3)
            for (Part q3 = 1; q3 < q2; ++q3) datas.push_back({{p1, p2, p3}, {q1, q2, q3}});
        }
      for (auto& [pp, qq] : datas) {
        Permutation w = perm_from_pq(PQData(pp, qq));
        CHECK(is_321_avoiding(w));
        // rows with q_i + 1 <= p_i leave a fixed point, possibly the identity
        if (w.is_identity()) continue;
        PQData back = pq_from_perm(w);
        CHECK(same_permutation(perm_from_pq(back), w));
        // canonical data is its own adjustment
        CHECK(q_prime(back).q == back.q);
      }
    }
}

TEST_CASE("round-trip and length identity over small symmetric groups") {
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& w : symmetric_group(n)) {
      if (!is_321_avoiding(w) || w.is_identity()) continue;
      PQData pq = pq_from_perm(w);
      CHECK(same_permutation(perm_from_pq(pq), w));
      auto [lam, mu] = shape_from_pq(pq);
      Part boxes = 0;
      for (std::size_t i = 0; i < lam.length(); ++i) boxes += lam[i] - mu[i];
      CHECK(perm_length(w) == to_exact(boxes));
    }
}

TEST_CASE("rank conditions single out the permutation at minimal length") {
  for (int n = 2; n <= 5; ++n) {
    auto group = symmetric_group(n);
    for (const Permutation& w : group) {
      if (!is_321_avoiding(w) || w.is_identity()) continue;
      PQData pq = pq_from_perm(w);
      const std::size_t t = pq.t();
      auto satisfies = [&](const Permutation& u) {
        for (std::size_t i = 0; i < t; ++i)
          for (std::size_t j = 0; j < t; ++j) {
            int need = 1 + static_cast<int>(i) - static_cast<int>(j);
            if (need <= 0) continue;
            int have = 0;
            for (Part a = 1; a <= pq.p[j]; ++a)
              if (u(static_cast<int>(a)) > pq.q[i]) ++have;
            if (have < need) return false;
          }
        return true;
      };
      CHECK(satisfies(w));
      for (const Permutation& u : group) {
        if (!satisfies(u)) continue;
        if (same_permutation(u, w)) continue;
        CHECK(perm_length(u) > perm_length(w));
      }
    }
  }
}

TEST_CASE("labeled skew data") {
  LabeledSkew ls = bjs_labeled_skew(P({3, 1, 2, 5, 4}));
  CHECK(ls.shape.outer == Partition({3, 1}));
  CHECK(ls.shape.inner == Partition({1, 0}));
  CHECK(ls.flag.bound == Parts{1, 4});
  CHECK(ls.e == Parts{2, 4});
  CHECK(ls.labels.at(Cell{1, 2}) == 2);
  CHECK(ls.labels.at(Cell{1, 3}) == 1);
  CHECK(ls.labels.at(Cell{2, 1}) == 4);

  LabeledSkew two = bjs_labeled_skew(P({2, 1}));
  CHECK(two.shape.outer == Partition({1}));
  CHECK(two.shape.inner == Partition({0}));
  CHECK(two.flag.bound == Parts{1});
  CHECK(two.e == Parts{1});

  LabeledSkew swap2 = bjs_labeled_skew(P({1, 3, 2}));
  CHECK(swap2.shape.outer == Partition({1}));
  CHECK(swap2.shape.inner == Partition({0}));
  CHECK(swap2.flag.bound == Parts{2});
  CHECK(swap2.e == Parts{2});
}

TEST_CASE("labels drop along rows and grow down columns") {
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& w : symmetric_group(n)) {
      if (!is_321_avoiding(w) || w.is_identity()) continue;
      LabeledSkew ls = bjs_labeled_skew(w);
      for (const auto& [cell, v] : ls.labels) {
        auto right = ls.labels.find(Cell{cell.row, cell.col + 1});
        if (right != ls.labels.end()) CHECK(right->second == v - 1);
        auto below = ls.labels.find(Cell{cell.row + 1, cell.col});
        if (below != ls.labels.end()) CHECK(below->second == v + 1);
      }
    }
}

TEST_CASE("pipe dream enumeration") {
  auto single = enumerate_pipe_dreams(P({2, 1, 3}), true, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].crosses == std::set<std::pair<int, int>>{{1, 1}});

  auto none = enumerate_pipe_dreams(P({1, 2, 3}), true, 0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].crosses.empty());

  auto two = enumerate_pipe_dreams(P({1, 3, 2}), true, 0);
  REQUIRE(two.size() == 2);
  std::set<PipeDream> got(two.begin(), two.end());
  CHECK(got.count(PipeDream{{{1, 2}}}) == 1);
  CHECK(got.count(PipeDream{{{2, 1}}}) == 1);

  auto hecke = enumerate_pipe_dreams(P({1, 3, 2}), false, 1);
  CHECK(hecke.size() == 3); // adds the double cross {(1,2),(2,1)}
}

TEST_CASE("hecke product absorbs repeated letters") {
  PipeDream both{{{1, 2}, {2, 1}}};
  CHECK(same_permutation(demazure_of_dream(both, 3), P({1, 3, 2})));
  PipeDream stacked{{{1, 1}, {1, 2}}};
  CHECK(same_permutation(demazure_of_dream(stacked, 3), P({3, 1, 2})));
}

TEST_CASE("tableau to pipe dream map") {
  {
    Filling T{bjs_labeled_skew(P({2, 1})).shape, {{Cell{1, 1}, {1}}}};
    CHECK(tableau_to_pipe_dream(P({2, 1}), T).crosses ==
          std::set<std::pair<int, int>>{{1, 1}});
  }
  {
    Filling T{bjs_labeled_skew(P({1, 3, 2})).shape, {{Cell{1, 1}, {2}}}};
    CHECK(tableau_to_pipe_dream(P({1, 3, 2}), T).crosses ==
          std::set<std::pair<int, int>>{{2, 1}});
  }
  {
    Filling T{bjs_labeled_skew(P({1, 3, 2})).shape, {{Cell{1, 1}, {1, 2}}}};
    CHECK(tableau_to_pipe_dream(P({1, 3, 2}), T).crosses ==
          std::set<std::pair<int, int>>{{1, 2}, {2, 1}});
  }
  {
    // entry above the flag is rejected
    Filling T{bjs_labeled_skew(P({2, 1})).shape, {{Cell{1, 1}, {2}}}};
    CHECK_THROWS(tableau_to_pipe_dream(P({2, 1}), T));
  }
}

TEST_CASE("tableau map is a weight-preserving bijection at small scale") {
  for (const Permutation& w : symmetric_group(3)) {
    if (!is_321_avoiding(w) || w.is_identity()) continue;
    LabeledSkew ls = bjs_labeled_skew(w);
    long long len = perm_length(w).get_si();
    auto fills = enumerate_flagged_set_valued(ls.shape, ls.flag, len + 2);
    auto dreams = enumerate_pipe_dreams(w, false, 2);
    std::set<PipeDream> dream_set(dreams.begin(), dreams.end());
    REQUIRE(fills.size() == dreams.size());
    std::set<PipeDream> images;
    for (const auto& T : fills) {
      PipeDream D = tableau_to_pipe_dream(w, T);
      CHECK(dream_set.count(D) == 1);
      CHECK(static_cast<long long>(D.crosses.size()) == T.total_entries());
      // weight: multiset of x-indices = multiset of entries
      std::multiset<int> rows, entries;
      for (const auto& [i, j] : D.crosses) rows.insert(i);
      for (const auto& [cell, set] : T.boxes)
        for (int v : set) entries.insert(v);
      CHECK(rows == entries);
      CHECK(images.insert(D).second); // injective
    }
    CHECK(images.size() == dream_set.size()); // onto
  }
}
