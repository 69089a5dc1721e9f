#include <gtest/gtest.h>

#include <orbitcount/builtins.hpp>
#include <orbitcount/power_series.hpp>
#include <orbitcount/transforms.hpp>

using namespace orbitcount;

TEST(Transforms, GoldenMeanOrbits) {
  const auto orbits = fix_to_orbit(builtin({"golden_mean", {}}, 10));
  EXPECT_EQ(orbits.view(), View::Orbit);
  EXPECT_EQ(to_string(orbits), "1 1 1 1 2 2 4 5 8 11");
  EXPECT_EQ(orbit_to_fix(orbits), builtin({"golden_mean", {}}, 10));
}

TEST(Transforms, FullShiftOrbits) {
  // necklace counts for two symbols
  EXPECT_EQ(to_string(fix_to_orbit(builtin({"full_shift", {{"a", std::int64_t{2}}}}, 8))), "2 1 2 3 6 9 18 30");
}

TEST(Transforms, ViewChecks) {
  const auto o = zeta_sequence(4);
  EXPECT_THROW(fix_to_orbit(o), ViewError);
  EXPECT_THROW(euler(o.with_view(View::Fix)), ViewError);
  EXPECT_THROW(euler_inverse(o), ViewError);
}

TEST(Transforms, Realizability) {
  const auto bad_integral = Sequence::of(View::Fix, {1, 2});  // (2 - 1)/2
  const auto r = realizable_as_fix(bad_integral);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.index, 2u);
  EXPECT_EQ(r.failure, RealizabilityFailure::NonIntegral);

  const auto bad_sign = Sequence::of(View::Fix, {3, 1});  // (1 - 3)/2 = -1
  const auto s = realizable_as_fix(bad_sign);
  EXPECT_FALSE(s);
  EXPECT_EQ(s.index, 2u);
  EXPECT_EQ(s.failure, RealizabilityFailure::Negative);

  EXPECT_TRUE(realizable_as_fix(builtin({"golden_mean", {}}, 30)));
  EXPECT_TRUE(realizable_as_fix(Sequence::of(View::Plain, {0, 0, 3})));
  EXPECT_FALSE(realizable_as_fix(Sequence::of(View::Plain, {-1})));

  try {
    fix_to_orbit(bad_integral);
    FAIL() << "expected RealizabilityError";
  } catch (const RealizabilityError& e) {
    EXPECT_EQ(e.index(), 2u);
    EXPECT_EQ(e.kind(), RealizabilityFailure::NonIntegral);
    EXPECT_STREQ(e.what(), "NonIntegral(2)");
  }
}

TEST(Transforms, EulerOfZetaIsPartitions) {
  EXPECT_EQ(to_string(euler(zeta_sequence(12))), "1 2 3 5 7 11 15 22 30 42 56 77");
  EXPECT_EQ(euler(zeta_sequence(3)).view(), View::Monoid);
}

TEST(Transforms, EulerInverse) {
  const auto g = Sequence::of(View::Monoid, {1, 2, 3, 5, 7, 11});
  EXPECT_EQ(euler_inverse(g), zeta_sequence(6));
  // G = (1, 0) forces O(2) = -1
  EXPECT_THROW(euler_inverse(Sequence::of(View::Monoid, {1, 0})), RealizabilityError);
}

TEST(Transforms, Multiplicativity) {
  EXPECT_TRUE(is_multiplicative(zeta_sequence(50)));
  EXPECT_TRUE(is_multiplicative(builtin({"id_orbits", {}}, 50)));
  const auto m = is_multiplicative(builtin({"full_shift", {{"a", std::int64_t{2}}}}, 10));
  ASSERT_FALSE(m);
  EXPECT_EQ(*m.witness, (std::pair<Index, Index>{1, 1}));
  const auto c = is_multiplicative(Sequence::of(View::Orbit, {1, 2, 3, 4, 5, 7}));
  ASSERT_FALSE(c);
  EXPECT_EQ(*c.witness, (std::pair<Index, Index>{2, 3}));
  // Truncation too short for any coprime pair
  EXPECT_TRUE(is_multiplicative(Sequence::of(View::Orbit, {1, 9, 9, 9, 9})));
}

TEST(Transforms, ConvertView) {
  const auto golden = builtin({"golden_mean", {}}, 6);
  EXPECT_EQ(to_string(convert_view(golden, View::Monoid)), "1 2 3 5 8 13");
  EXPECT_EQ(convert_view(convert_view(golden, View::Monoid), View::Fix), golden);
  EXPECT_EQ(convert_view(golden, View::Fix), golden);
  EXPECT_THROW(convert_view(golden.with_view(View::Plain), View::Orbit), ViewError);
}
