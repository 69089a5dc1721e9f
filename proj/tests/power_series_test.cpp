#include <gtest/gtest.h>

#include <orbitcount/builtins.hpp>
#include <orbitcount/power_series.hpp>
#include <orbitcount/transforms.hpp>

using namespace orbitcount;

TEST(PowerSeriesTest, ExpOfGeometricLog) {
  // exp(sum 2^n s^n / n) = 1/(1 - 2s)
  std::vector<Rational> log_terms = {0};
  for (Index n = 1; n <= 4; ++n) log_terms.push_back(Rational(ipow(Index(2), n), Integer(n)));
  const auto e = exp_series(PowerSeries(log_terms));
  EXPECT_EQ(e.order(), 4u);
  for (Index n = 0; n <= 4; ++n) EXPECT_EQ(e[n], Rational(ipow(Index(2), n)));
}

TEST(PowerSeriesTest, ExpNeedsZeroConstant) {
  EXPECT_THROW(exp_series(PowerSeries({1, 1})), ArgumentError);
}

TEST(PowerSeriesTest, DualRationalZeta) {
  const auto z = zeta_from_fix(builtin({"dual_rational", {{"a", std::int64_t{2}}, {"b", std::int64_t{3}}}}, 8));
  EXPECT_EQ(to_string(monoid_counts(z)), "1 3 9 27 81 243 729 2187");
}

TEST(PowerSeriesTest, NonRealizableFixHasFractionalZeta) {
  try {
    zeta_from_fix(Sequence::of(View::Fix, {1, 2}));
    FAIL() << "expected ZetaIntegralityError";
  } catch (const ZetaIntegralityError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(PowerSeriesTest, ProductFormulaOfZeta) {
  const auto p = product_formula(zeta_sequence(10));
  EXPECT_EQ(to_string(monoid_counts(p)), "1 2 3 5 7 11 15 22 30 42");
  EXPECT_EQ(p[0], Rational(1));
}

TEST(PowerSeriesTest, MonoidCountsRejectsFractions) {
  EXPECT_THROW(monoid_counts(PowerSeries({1, Rational(1, 2)})), ZetaIntegralityError);
}

TEST(PowerSeriesTest, SIntegerMonoidPrefix) {
  const auto orbits = fix_to_orbit(builtin({"s_integer_23", {}}, 9));
  EXPECT_EQ(to_string(euler(orbits)), "1 1 3 4 10 13 33 56 122");
}
