#include <gtest/gtest.h>

#include <orbitcount/builtins.hpp>
#include <orbitcount/dirichlet.hpp>

using namespace orbitcount;

TEST(Dirichlet, ZetaSquaredIsDivisorCount) {
  const auto z = zeta_poly(12);
  const auto d = z * z;
  for (Index n = 1; n <= 12; ++n) EXPECT_EQ(d[n], Rational(divisors(n).size())) << n;
}

TEST(Dirichlet, MobiusInvertsZeta) {
  EXPECT_EQ(mul(zeta_poly(30), mobius_poly(30)), DirichletPoly::unit(30));
  EXPECT_EQ(div(DirichletPoly::unit(30), zeta_poly(30)), mobius_poly(30));
}

TEST(Dirichlet, Shifts) {
  const auto z1 = zeta_shift(1, 5);
  EXPECT_EQ(z1[4], Rational(4));
  const auto zm = zeta_shift(-1, 5);
  EXPECT_EQ(zm[4], Rational(1, 4));
  const auto d = zeta_dilated_shift(2, 1, 16);
  EXPECT_EQ(d[9], Rational(3));
  EXPECT_EQ(d[8], Rational(0));
  EXPECT_EQ(d[1], Rational(1));
}

TEST(Dirichlet, Dilate) {
  const auto d = dilate(zeta_poly(10), 2);
  for (Index n = 1; n <= 10; ++n) EXPECT_EQ(d[n], Rational(n == 1 || n == 4 || n == 9 ? 1 : 0)) << n;
  EXPECT_THROW(dilate(d, 0), ArgumentError);
  EXPECT_EQ(d.truncated(4).size(), 4u);
  EXPECT_THROW(d.truncated(11), TruncationError);
}

TEST(Dirichlet, DivisionNeedsUnitHead) {
  auto b = DirichletPoly::zero(4);
  b[2] = 1;
  EXPECT_THROW(div(zeta_poly(4), b), ArgumentError);
}

TEST(Dirichlet, Sparse) {
  const auto s = sparse({{1, 1}, {3, -3}}, 5);
  EXPECT_EQ(s[1], Rational(1));
  EXPECT_EQ(s[3], Rational(-3));
  EXPECT_EQ(s[5], Rational(0));
  EXPECT_THROW(sparse({{1, 1}, {1, 2}}, 5), ArgumentError);
  EXPECT_THROW(sparse({{0, 1}}, 5), ArgumentError);
  EXPECT_THROW(sparse({{6, 1}}, 5), ArgumentError);
}

TEST(Dirichlet, AddScaleAndDifference) {
  const auto z = zeta_poly(6);
  const auto twice = add(z, z);
  EXPECT_EQ(twice, scale(z, 2));
  EXPECT_EQ(first_difference(z, z), 0u);
  auto w = z;
  w[5] = 0;
  EXPECT_EQ(first_difference(z, w), 5u);
}

TEST(Dirichlet, FromSequences) {
  EXPECT_EQ(from_sequence(zeta_sequence(7)), zeta_poly(7));
  const auto r = a_s_rational(PrimeSet::finite({2}), 4);
  EXPECT_EQ(from_sequence(r)[4], Rational(10));
}
