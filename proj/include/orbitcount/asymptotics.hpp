#pragma once

// Orbit growth statistics. This is the only floating-point part of the
// library; everything feeding it is exact.

#include <cmath>
#include <string>

#include "sequence.hpp"

namespace orbitcount {

struct GrowthReport {
  Index horizon = 0;
  double entropy = 0;        // h, in nats
  double leading_coeff = 0;  // C1 in F(n) ~ C1 e^{hn}
  Integer pi_actual;
  double pi_predicted = 0;
  double mertens_actual = 0;
  double mertens_minus_harmonic = 0;  // M(N) - C1 H_N
};

namespace detail {

inline void require_horizon(const Sequence& o, Index horizon, const char* op) {
  if (horizon == 0 || horizon > o.size())
    throw TruncationError(std::string(op) + ": horizon " + std::to_string(horizon) + " outside 1.." +
                          std::to_string(o.size()));
}

// x * e^{-hn} without overflowing when x is huge: scale x down by a power of
// two first and fold the shift into the exponent.
inline double damped(const Integer& x, double h, Index n) {
  if (x == 0) return 0.0;
  const auto bits = boost::multiprecision::msb(x);
  const unsigned shift = bits > 60 ? static_cast<unsigned>(bits - 60) : 0;
  const Integer top = x >> shift;
  return top.convert_to<double>() * std::exp(shift * std::log(2.0) - h * static_cast<double>(n));
}

inline double harmonic(Index n) {
  double total = 0;
  for (Index k = 1; k <= n; ++k) total += 1.0 / static_cast<double>(k);
  return total;
}

}  // namespace detail

// Number of closed orbits of length at most N.
inline Integer pi_count(const Sequence& orbits, Index horizon) {
  require_view(orbits, View::Orbit, "pi_count");
  detail::require_horizon(orbits, horizon, "pi_count");
  Integer total = 0;
  for (Index n = 1; n <= horizon; ++n) total += orbits[n];
  return total;
}

// sum_{n<=N} O(n) e^{-hn}, summed left to right.
inline double mertens_sum(const Sequence& orbits, Index horizon, double h) {
  require_view(orbits, View::Orbit, "mertens_sum");
  detail::require_horizon(orbits, horizon, "mertens_sum");
  if (!(h > 0) || !std::isfinite(h)) throw ArgumentError("mertens_sum: h must be a positive finite number");
  double total = 0;
  for (Index n = 1; n <= horizon; ++n) total += detail::damped(orbits[n], h, n);
  return total;
}

// Predicted pi_T(N) = C1 e^{h(N+1)} / (N (e^h - 1)).
inline double predicted_pi(double h, double c1, Index horizon) {
  return c1 * std::exp(h * static_cast<double>(horizon + 1)) / (static_cast<double>(horizon) * std::expm1(h));
}

inline GrowthReport pnt_report(const Sequence& orbits, double h, double c1, Index horizon) {
  if (!(c1 > 0) || !std::isfinite(c1)) throw ArgumentError("pnt_report: C1 must be a positive finite number");
  GrowthReport report;
  report.horizon = horizon;
  report.entropy = h;
  report.leading_coeff = c1;
  report.pi_actual = pi_count(orbits, horizon);
  report.mertens_actual = mertens_sum(orbits, horizon, h);
  report.pi_predicted = predicted_pi(h, c1, horizon);
  report.mertens_minus_harmonic = report.mertens_actual - c1 * detail::harmonic(horizon);
  return report;
}

// log(F(N)) / N. A rough guide to h for exploration; nothing relies on it.
inline double entropy_estimate(const Sequence& fix, Index horizon) {
  require_view(fix, View::Fix, "entropy_estimate");
  detail::require_horizon(fix, horizon, "entropy_estimate");
  const Integer& value = fix[horizon];
  if (value <= 0) return 0.0;
  const auto bits = boost::multiprecision::msb(value);
  const unsigned shift = bits > 60 ? static_cast<unsigned>(bits - 60) : 0;
  const double log_value = std::log((value >> shift).convert_to<double>()) + shift * std::log(2.0);
  return log_value / static_cast<double>(horizon);
}

}  // namespace orbitcount
