#pragma once

// Enumerates every way to write a truncated orbit sequence as the orbit
// sequence of a Cartesian product of two systems.
//
// At index n the product count splits as
//   t(n) = R(n) + u(n) F'_v(n) + v(n) F'_u(n) + n u(n) v(n),
// with F'_w(n) = sum_{d|n, d<n} d w(d) and R(n) the lcm = n pairs that avoid
// index n entirely. Given earlier values this pins v(n) once u(n) is chosen,
// so the search walks u(n) upward and keeps the choices with integral v(n) >= 0.

#include <cstddef>
#include <numeric>
#include <vector>

#include "numtheory.hpp"
#include "sequence.hpp"

namespace orbitcount {

struct FactorPair {
  Sequence left;
  Sequence right;
};

struct FactorSearchResult {
  std::vector<FactorPair> pairs;
  bool overflow = false;  // the limit was hit; more pairs exist
};

inline constexpr std::size_t kDefaultFactorLimit = 10000;

namespace detail {

class FactorSearch {
 public:
  FactorSearch(const Sequence& target, Index length, std::size_t limit)
      : target_(target), length_(length), limit_(limit), u_(length + 1), v_(length + 1) {}

  FactorSearchResult run() {
    const Integer& head = target_[1];
    // u(1) v(1) = t(1), both at least 1.
    for (Integer x = 1; x <= head && !result_.overflow; ++x) {
      if (head % x != 0) continue;
      u_[1] = x;
      v_[1] = head / x;
      extend(2);
    }
    return std::move(result_);
  }

 private:
  void extend(Index n) {
    if (result_.overflow) return;
    if (n > length_) {
      record();
      return;
    }
    const auto divs = divisors(n);
    Integer rest = target_[n];
    Integer fix_u = 0, fix_v = 0;
    for (Index d1 : divs) {
      if (d1 == n) continue;
      fix_u += d1 * u_[d1];
      fix_v += d1 * v_[d1];
      if (u_[d1] == 0) continue;
      for (Index d2 : divs)
        if (d2 != n && std::lcm(d1, d2) == n) rest -= u_[d1] * v_[d2] * std::gcd(d1, d2);
    }
    if (rest < 0) return;
    // fix_u >= u(1) >= 1 and fix_v >= v(1) >= 1 for n > 1.
    for (Integer x = 0;; ++x) {
      const Integer numerator = rest - x * fix_v;
      if (numerator < 0) break;
      const Integer denominator = fix_u + n * x;
      if (numerator % denominator != 0) continue;
      u_[n] = x;
      v_[n] = numerator / denominator;
      extend(n + 1);
      if (result_.overflow) break;
    }
    u_[n] = 0;
    v_[n] = 0;
  }

  void record() {
    if (result_.pairs.size() == limit_) {
      result_.overflow = true;
      return;
    }
    result_.pairs.push_back({Sequence(View::Orbit, std::vector<Integer>(u_.begin() + 1, u_.end())),
                             Sequence(View::Orbit, std::vector<Integer>(v_.begin() + 1, v_.end()))});
  }

  const Sequence& target_;
  Index length_;
  std::size_t limit_;
  std::vector<Integer> u_, v_;  // one-indexed; slot 0 unused
  FactorSearchResult result_;
};

}  // namespace detail

// All ordered pairs (u, v) of orbit sequences of length N with
// product_orbits(u, v) = target on 1..N, in lexicographic order of u.
inline FactorSearchResult factor_search(const Sequence& target, Index length,
                                        std::size_t limit = kDefaultFactorLimit) {
  require_view(target, View::Orbit, "factor_search");
  if (length == 0 || length > target.size())
    throw TruncationError("factor_search: length " + std::to_string(length) + " outside 1.." +
                          std::to_string(target.size()));
  if (target[1] < 1) throw ArgumentError("factor_search: target(1) must be >= 1");
  return detail::FactorSearch(target, length, limit).run();
}

}  // namespace orbitcount
