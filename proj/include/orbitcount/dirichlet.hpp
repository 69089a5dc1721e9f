#pragma once

// Truncated Dirichlet series sum_{n<=N} c(n) n^{-s} with exact rational
// coefficients. Products truncate to the shorter operand; nothing is ever
// padded with zeros.

#include <algorithm>
#include <utility>
#include <vector>

#include "numtheory.hpp"
#include "sequence.hpp"

namespace orbitcount {

class DirichletPoly {
 public:
  explicit DirichletPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ArgumentError("DirichletPoly: truncation length must be >= 1");
  }

  // Zero series of length N.
  static DirichletPoly zero(Index length) {
    if (length == 0) throw ArgumentError("DirichletPoly: truncation length must be >= 1");
    return DirichletPoly(std::vector<Rational>(length));
  }

  // The unit 1 = 1^{-s}.
  static DirichletPoly unit(Index length) {
    auto out = zero(length);
    out.coeffs_[0] = 1;
    return out;
  }

  Index size() const { return coeffs_.size(); }
  const Rational& operator[](Index n) const { return coeffs_[n - 1]; }
  Rational& operator[](Index n) { return coeffs_[n - 1]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  DirichletPoly truncated(Index length) const {
    if (length == 0 || length > size()) throw TruncationError("DirichletPoly: bad truncation");
    return DirichletPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + length));
  }

  friend bool operator==(const DirichletPoly&, const DirichletPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

inline DirichletPoly from_sequence(const Sequence& s) {
  std::vector<Rational> coeffs;
  for (const auto& t : s.terms()) coeffs.emplace_back(t);
  return DirichletPoly(std::move(coeffs));
}

inline DirichletPoly from_sequence(const RationalSequence& s) {
  return DirichletPoly(std::vector<Rational>(s.terms().begin(), s.terms().end()));
}

// Dirichlet convolution.
inline DirichletPoly mul(const DirichletPoly& a, const DirichletPoly& b) {
  const Index length = std::min(a.size(), b.size());
  auto out = DirichletPoly::zero(length);
  for (Index d = 1; d <= length; ++d) {
    if (a[d] == 0) continue;
    for (Index e = 1; d * e <= length; ++e)
      if (b[e] != 0) out[d * e] += a[d] * b[e];
  }
  return out;
}

inline DirichletPoly operator*(const DirichletPoly& a, const DirichletPoly& b) { return mul(a, b); }

inline DirichletPoly add(const DirichletPoly& a, const DirichletPoly& b) {
  const Index length = std::min(a.size(), b.size());
  auto out = DirichletPoly::zero(length);
  for (Index n = 1; n <= length; ++n) out[n] = a[n] + b[n];
  return out;
}

inline DirichletPoly scale(const DirichletPoly& a, const Rational& factor) {
  auto out = a;
  for (Index n = 1; n <= out.size(); ++n) out[n] *= factor;
  return out;
}

// The c with b * c = a, solved index by index. Requires b(1) != 0.
inline DirichletPoly div(const DirichletPoly& a, const DirichletPoly& b) {
  if (b[1] == 0) throw ArgumentError("Dirichlet division: leading coefficient of divisor is zero");
  const Index length = std::min(a.size(), b.size());
  auto out = DirichletPoly::zero(length);
  for (Index n = 1; n <= length; ++n) {
    Rational rest = a[n];
    for (Index d : divisors(n))
      if (d > 1 && b[d] != 0) rest -= b[d] * out[n / d];
    out[n] = rest / b[1];
  }
  return out;
}

// zeta(s - a): coefficient n^a. Negative shifts give 1/n^|a|.
inline DirichletPoly zeta_shift(long long a, Index length) {
  auto out = DirichletPoly::zero(length);
  for (Index n = 1; n <= length; ++n) {
    const Integer power = ipow(n, static_cast<Index>(a < 0 ? -a : a));
    out[n] = a < 0 ? Rational(Integer(1), power) : Rational(power);
  }
  return out;
}

inline DirichletPoly zeta_poly(Index length) { return zeta_shift(0, length); }

inline DirichletPoly mobius_poly(Index length) {
  auto out = DirichletPoly::zero(length);
  for (Index n = 1; n <= length; ++n) out[n] = mobius(n);
  return out;
}

// a(ks): coefficient a(j) moves to index j^k.
inline DirichletPoly dilate(const DirichletPoly& a, Index k) {
  if (k == 0) throw ArgumentError("dilate: k must be >= 1");
  auto out = DirichletPoly::zero(a.size());
  for (Index j = 1;; ++j) {
    Integer m = ipow(j, k);
    if (m > a.size()) break;
    out[m.convert_to<Index>()] = a[j];
  }
  return out;
}

// zeta(ks - c): coefficient j^c at index j^k, zero elsewhere.
inline DirichletPoly zeta_dilated_shift(Index k, long long c, Index length) {
  return dilate(zeta_shift(c, length), k);
}

// Finite Dirichlet polynomial with the listed (index, coefficient) terms.
inline DirichletPoly sparse(const std::vector<std::pair<Index, Rational>>& terms, Index length) {
  auto out = DirichletPoly::zero(length);
  std::vector<bool> seen(length + 1, false);
  for (const auto& [n, c] : terms) {
    if (n == 0 || n > length)
      throw ArgumentError("sparse: index " + std::to_string(n) + " outside 1.." + std::to_string(length));
    if (seen[n]) throw ArgumentError("sparse: duplicate index " + std::to_string(n));
    seen[n] = true;
    out[n] = c;
  }
  return out;
}

// Index of the first coefficient where a and b differ over their common
// length; 0 when they agree.
inline Index first_difference(const DirichletPoly& a, const DirichletPoly& b) {
  const Index length = std::min(a.size(), b.size());
  for (Index n = 1; n <= length; ++n)
    if (a[n] != b[n]) return n;
  return 0;
}

}  // namespace orbitcount
