#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewdet/shapes.hpp"

using namespace skewdet;

TEST_CASE("partition validation") {
  CHECK_NOTHROW(Partition({3, 1, 1}));
  CHECK_NOTHROW(Partition({2, 0, 0}));
  CHECK_NOTHROW(Partition(Parts{}));
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({3, -1}));
  CHECK(Partition({4, 2, 1}).sum() == 7);
}

TEST_CASE("skew reference validation") {
  CHECK_NOTHROW(SkewRef(Partition({3, 2}), Partition({1, 0})));
  CHECK_THROWS(SkewRef(Partition({3, 2}), Partition({1})));      // length mismatch
  CHECK_THROWS(SkewRef(Partition({2, 2}), Partition({3, 0})));   // not contained
  CHECK(SkewRef(Partition({3, 2}), Partition({1, 0})).size() == 4);
}

TEST_CASE("conjugate and padding") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition(Parts{})) == Partition(Parts{}));
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  CHECK(conjugate(conjugate(Partition({5, 3, 3, 1}))) == Partition({5, 3, 3, 1}));
  CHECK(padded(Partition({2, 1}), 4) == Partition({2, 1, 0, 0}));
  CHECK(padded(Partition({2, 1}), 2) == Partition({2, 1}));
  CHECK(contains(Partition({3, 2}), Partition({2, 2})));
  CHECK_FALSE(contains(Partition({3, 2}), Partition({3, 3})));
  CHECK_FALSE(contains(Partition({3}), Partition({2, 1})));
}

TEST_CASE("row normal form") {
  auto s = sort_rows_to_partition(IntSeq({1, 3}));
  REQUIRE(s.has_value());
  CHECK(s->shape == Partition({2, 2}));
  CHECK(s->sign == -1);

  auto already = sort_rows_to_partition(IntSeq({3, 1}));
  REQUIRE(already.has_value());
  CHECK(already->shape == Partition({3, 1}));
  CHECK(already->sign == 1);

  CHECK_FALSE(sort_rows_to_partition(IntSeq({2, 3})).has_value());  // key collision
}

TEST_CASE("column normal form") {
  auto s = sort_cols_to_partition(IntSeq({0, 2}));
  REQUIRE(s.has_value());
  CHECK(s->shape == Partition({1, 1}));
  CHECK(s->sign == -1);

  CHECK_FALSE(sort_cols_to_partition(IntSeq({1, 2})).has_value());

  auto id = sort_cols_to_partition(IntSeq({2, 1}));
  REQUIRE(id.has_value());
  CHECK(id->shape == Partition({2, 1}));
  CHECK(id->sign == 1);
}

TEST_CASE("three-row sort through a full reversal") {
  // keys l_i - i: 0, 2, 4 -> reversal (3 2 1), three inversions
  auto s = sort_rows_to_partition(IntSeq({1, 4, 7}));
  REQUIRE(s.has_value());
  CHECK(s->sign == -1);
  // lam_i = l_{w(i)} - w(i) + i with w = reversal
  CHECK(s->shape == Partition({5, 4, 3}));
}
