#pragma once

// Truncated ordinary power series and the two generating-function routes to
// the orbit monoid counts:
//
//   zeta_T(s) = exp(sum_n F(n) s^n / n) = prod_i (1 - s^i)^{-O(i)} = 1 + sum_n G(n) s^n.

#include <utility>
#include <vector>

#include "sequence.hpp"
#include "transforms.hpp"

namespace orbitcount {

// Coefficients of s^0 .. s^N.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ArgumentError("PowerSeries: needs at least the constant term");
  }

  Index order() const { return coeffs_.size() - 1; }
  const Rational& operator[](Index i) const { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Formal exponential, via n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
inline PowerSeries exp_series(const PowerSeries& a) {
  if (a[0] != 0) throw ArgumentError("exp_series: constant term must be zero");
  const Index order = a.order();
  std::vector<Rational> b(order + 1);
  b[0] = 1;
  for (Index n = 1; n <= order; ++n) {
    Rational total = 0;
    for (Index k = 1; k <= n; ++k)
      if (a[k] != 0) total += Rational(k) * a[k] * b[n - k];
    b[n] = total / n;
  }
  return PowerSeries(std::move(b));
}

// Raised when a zeta function has a coefficient that is not a nonnegative
// integer, so the fixed-point data cannot come from a map.
class ZetaIntegralityError : public Error {
 public:
  ZetaIntegralityError(Index index, const Rational& value)
      : Error("zeta coefficient " + std::to_string(index) + " is " + to_string(value) +
              ", not a nonnegative integer"),
        index_(index) {}
  Index index() const { return index_; }

 private:
  Index index_;
};

// exp(sum_{n<=N} F(n) s^n / n) to order N.
inline PowerSeries zeta_from_fix(const Sequence& fix) {
  require_view(fix, View::Fix, "zeta_from_fix");
  std::vector<Rational> log_terms(fix.size() + 1);
  for (Index n = 1; n <= fix.size(); ++n) log_terms[n] = Rational(fix[n], Integer(n));
  auto zeta = exp_series(PowerSeries(std::move(log_terms)));
  for (Index n = 0; n <= zeta.order(); ++n)
    if (zeta[n] < 0 || boost::multiprecision::denominator(zeta[n]) != 1) throw ZetaIntegralityError(n, zeta[n]);
  return zeta;
}

// prod_{i<=N} (1 - s^i)^{-O(i)} to order N. Each factor is expanded with
// binomial coefficients: (1 - x)^{-m} = sum_j C(m + j - 1, j) x^j.
inline PowerSeries product_formula(const Sequence& orbits) {
  require_view(orbits, View::Orbit, "product_formula");
  const Index order = orbits.size();
  std::vector<Integer> acc(order + 1);
  acc[0] = 1;
  for (Index i = 1; i <= order; ++i) {
    const Integer& m = orbits[i];
    if (m == 0) continue;
    std::vector<Integer> factor(order / i + 1);
    factor[0] = 1;
    for (Index j = 1; j < factor.size(); ++j) factor[j] = factor[j - 1] * (m + j - 1) / j;
    std::vector<Integer> next(order + 1);
    for (Index n = 0; n <= order; ++n) {
      if (acc[n] == 0) continue;
      for (Index j = 0; n + i * j <= order; ++j) next[n + i * j] += acc[n] * factor[j];
    }
    acc = std::move(next);
  }
  std::vector<Rational> coeffs(acc.begin(), acc.end());
  return PowerSeries(std::move(coeffs));
}

// The monoid counts G(1..N) carried by a zeta power series.
inline Sequence monoid_counts(const PowerSeries& zeta) {
  std::vector<Integer> out;
  for (Index n = 1; n <= zeta.order(); ++n) {
    if (boost::multiprecision::denominator(zeta[n]) != 1 || zeta[n] < 0) throw ZetaIntegralityError(n, zeta[n]);
    out.push_back(boost::multiprecision::numerator(zeta[n]));
  }
  return Sequence(View::Monoid, std::move(out));
}

}  // namespace orbitcount
