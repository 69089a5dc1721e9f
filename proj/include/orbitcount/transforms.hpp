#pragma once

// Conversions between the three counting views of one system:
//
//   fix    F(n) = sum_{d|n} d O(d)                  (periodic points)
//   orbit  O(n) = (1/n) sum_{d|n} mu(n/d) F(d)      (closed orbits)
//   monoid G(n) = Euler transform of O              (weight-n orbit multisets)
//
// plus the realizability and multiplicativity predicates.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numtheory.hpp"
#include "sequence.hpp"

namespace orbitcount {

enum class RealizabilityFailure { NonIntegral, Negative };

inline std::string_view failure_name(RealizabilityFailure kind) {
  return kind == RealizabilityFailure::NonIntegral ? "NonIntegral" : "Negative";
}

// A candidate fixed-point sequence is not the fixed-point count of any map.
class RealizabilityError : public Error {
 public:
  RealizabilityError(Index index, RealizabilityFailure kind)
      : Error(std::string(failure_name(kind)) + "(" + std::to_string(index) + ")"), index_(index), kind_(kind) {}

  Index index() const { return index_; }
  RealizabilityFailure kind() const { return kind_; }

 private:
  Index index_;
  RealizabilityFailure kind_;
};

struct Realizability {
  bool realizable = true;
  Index index = 0;  // smallest failing n when not realizable
  std::optional<RealizabilityFailure> failure;

  explicit operator bool() const { return realizable; }
};

namespace detail {

inline std::vector<Integer> divisor_weighted_sum(std::span<const Integer> orbits) {
  std::vector<Integer> fix(orbits.size());
  for (Index n = 1; n <= orbits.size(); ++n)
    for (Index d : divisors(n)) fix[n - 1] += d * orbits[d - 1];
  return fix;
}

// Mobius inversion of a signed fixed-point candidate. Stops at the first index
// where the quotient is nonintegral or negative.
inline std::vector<Integer> mobius_invert(std::span<const Integer> fix, Realizability& status) {
  std::vector<Integer> orbits;
  orbits.reserve(fix.size());
  for (Index n = 1; n <= fix.size(); ++n) {
    Integer total = 0;
    for (Index d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu == 1) total += fix[d - 1];
      else if (mu == -1) total -= fix[d - 1];
    }
    if (total % n != 0) {
      status = {false, n, RealizabilityFailure::NonIntegral};
      return orbits;
    }
    total /= n;
    if (total < 0) {
      status = {false, n, RealizabilityFailure::Negative};
      return orbits;
    }
    orbits.push_back(std::move(total));
  }
  status = {};
  return orbits;
}

inline Sequence invert_or_throw(std::span<const Integer> fix) {
  Realizability status;
  auto orbits = mobius_invert(fix, status);
  if (!status) throw RealizabilityError(status.index, *status.failure);
  return Sequence(View::Orbit, std::move(orbits));
}

}  // namespace detail

inline Sequence orbit_to_fix(const Sequence& orbits) {
  require_view(orbits, View::Orbit, "orbit_to_fix");
  return Sequence(View::Fix, detail::divisor_weighted_sum(orbits.terms()));
}

// Throws RealizabilityError at the first n where the Mobius sum is not a
// nonnegative multiple of n.
inline Sequence fix_to_orbit(const Sequence& fix) {
  require_view(fix, View::Fix, "fix_to_orbit");
  return detail::invert_or_throw(fix.terms());
}

// Accepts any view; only the terms are inspected.
inline Realizability realizable_as_fix(const Sequence& candidate) {
  Realizability status;
  detail::mobius_invert(candidate.terms(), status);
  return status;
}

// Euler transform through n G(n) = F(n) + sum_{k<n} F(k) G(n-k).
inline Sequence euler(const Sequence& orbits) {
  require_view(orbits, View::Orbit, "euler");
  const auto fix = detail::divisor_weighted_sum(orbits.terms());
  const Index length = orbits.size();
  std::vector<Integer> monoid(length + 1);
  monoid[0] = 1;
  for (Index n = 1; n <= length; ++n) {
    Integer total = 0;
    for (Index k = 1; k <= n; ++k) total += fix[k - 1] * monoid[n - k];
    if (total % n != 0) throw std::logic_error("euler: recurrence produced a nonintegral term at n=" + std::to_string(n));
    monoid[n] = total / n;
  }
  monoid.erase(monoid.begin());
  return Sequence(View::Monoid, std::move(monoid));
}

// Recovers F(n) = n G(n) - sum_{k<n} F(k) G(n-k), then Mobius-inverts. Throws
// RealizabilityError when g is not the Euler transform of an orbit sequence.
inline Sequence euler_inverse(const Sequence& monoid) {
  require_view(monoid, View::Monoid, "euler_inverse");
  const Index length = monoid.size();
  std::vector<Integer> fix(length);
  for (Index n = 1; n <= length; ++n) {
    Integer value = Integer(n) * monoid[n];
    for (Index k = 1; k < n; ++k) value -= fix[k - 1] * monoid[n - k];
    fix[n - 1] = std::move(value);
  }
  return detail::invert_or_throw(fix);
}

struct Multiplicativity {
  bool multiplicative = true;
  // Lexicographically smallest coprime (m, n) with s(mn) != s(m)s(n);
  // (1, 1) when s(1) != 1.
  std::optional<std::pair<Index, Index>> witness;

  explicit operator bool() const { return multiplicative; }
};

// Multiplicativity up to the truncation: only pairs with mn <= s.size() are tested.
inline Multiplicativity is_multiplicative(const Sequence& s) {
  if (s[1] != 1) return {false, std::pair<Index, Index>{1, 1}};
  const Index length = s.size();
  for (Index m = 2; m * 2 <= length; ++m)
    for (Index n = 2; m * n <= length; ++n)
      if (std::gcd(m, n) == 1 && s[m * n] != s[m] * s[n]) return {false, std::pair{m, n}};
  return {};
}

// Term-by-term view conversion used by the CLI: orbit <-> fix, and either of
// them -> monoid.
inline Sequence convert_view(const Sequence& s, View target) {
  if (s.view() == target) return s;
  switch (target) {
    case View::Fix:
      if (s.view() == View::Orbit) return orbit_to_fix(s);
      if (s.view() == View::Monoid) return orbit_to_fix(euler_inverse(s));
      break;
    case View::Orbit:
      if (s.view() == View::Fix) return fix_to_orbit(s);
      if (s.view() == View::Monoid) return euler_inverse(s);
      break;
    case View::Monoid:
      if (s.view() == View::Orbit) return euler(s);
      if (s.view() == View::Fix) return euler(fix_to_orbit(s));
      break;
    case View::Plain:
      return s.with_view(View::Plain);
  }
  throw ViewError("cannot convert a " + std::string(view_name(s.view())) + " sequence to the " +
                  std::string(view_name(target)) + " view");
}

}  // namespace orbitcount
