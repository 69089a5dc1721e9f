#include <gtest/gtest.h>

#include <orbitcount/builtins.hpp>
#include <orbitcount/factor_search.hpp>
#include <orbitcount/operators.hpp>

using namespace orbitcount;

TEST(FactorSearch, ZetaHasSixteenFactorPairsAtTen) {
  const auto found = factor_search(zeta_sequence(10), 10);
  EXPECT_FALSE(found.overflow);
  ASSERT_EQ(found.pairs.size(), 16u);
  for (const auto& pair : found.pairs) EXPECT_EQ(product_orbits(pair.left, pair.right), zeta_sequence(10));
  // ordered by the left factor, delta-like s_{all primes} first
  EXPECT_EQ(found.pairs.front().left, s_p_sequence(PrimeSet::all(), 10));
  EXPECT_EQ(found.pairs.back().left, zeta_sequence(10));
}

TEST(FactorSearch, DeltaOnlyFactorsTrivially) {
  const auto found = factor_search(delta_sequence(8), 8);
  ASSERT_EQ(found.pairs.size(), 1u);
  EXPECT_EQ(found.pairs[0].left, delta_sequence(8));
}

TEST(FactorSearch, HeadSplitsDivisors) {
  // t(1) = 6 splits as 1*6, 2*3, 3*2, 6*1 at N = 1
  EXPECT_EQ(factor_search(Sequence::of(View::Orbit, {6}), 1).pairs.size(), 4u);
}

TEST(FactorSearch, Limit) {
  const auto found = factor_search(zeta_sequence(10), 10, 5);
  EXPECT_TRUE(found.overflow);
  EXPECT_EQ(found.pairs.size(), 5u);
}

TEST(FactorSearch, Errors) {
  EXPECT_THROW(factor_search(zeta_sequence(5), 6), TruncationError);
  EXPECT_THROW(factor_search(zeta_sequence(5), 0), TruncationError);
  EXPECT_THROW(factor_search(Sequence::of(View::Orbit, {0, 1}), 2), ArgumentError);
  EXPECT_THROW(factor_search(Sequence::of(View::Fix, {1}), 1), ViewError);
}
