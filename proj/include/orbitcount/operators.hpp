#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "numtheory.hpp"
#include "sequence.hpp"

namespace orbitcount {

namespace detail {

inline Index common_length(const Sequence& a, const Sequence& b) { return std::min(a.size(), b.size()); }

}  // namespace detail

// Orbits of the Cartesian product: a pair of orbits of lengths d1, d2 splits
// into gcd(d1, d2) orbits of length lcm(d1, d2).
inline Sequence product_orbits(const Sequence& u, const Sequence& v) {
  require_view(u, View::Orbit, "product_orbits");
  require_view(v, View::Orbit, "product_orbits");
  const Index length = detail::common_length(u, v);
  std::vector<Integer> out(length);
  for (Index n = 1; n <= length; ++n) {
    const auto divs = divisors(n);
    Integer total = 0;
    for (Index d1 : divs) {
      if (u[d1] == 0) continue;
      for (Index d2 : divs)
        if (std::lcm(d1, d2) == n) total += u[d1] * v[d2] * std::gcd(d1, d2);
    }
    out[n - 1] = std::move(total);
  }
  return Sequence(View::Orbit, std::move(out));
}

inline Sequence union_orbits(const Sequence& u, const Sequence& v) {
  require_view(u, View::Orbit, "union_orbits");
  require_view(v, View::Orbit, "union_orbits");
  const Index length = detail::common_length(u, v);
  std::vector<Integer> out;
  for (Index n = 1; n <= length; ++n) out.push_back(u[n] + v[n]);
  return Sequence(View::Orbit, std::move(out));
}

inline Sequence product_fix(const Sequence& f, const Sequence& g) {
  require_view(f, View::Fix, "product_fix");
  require_view(g, View::Fix, "product_fix");
  const Index length = detail::common_length(f, g);
  std::vector<Integer> out;
  for (Index n = 1; n <= length; ++n) out.push_back(f[n] * g[n]);
  return Sequence(View::Fix, std::move(out));
}

namespace detail {

inline Index iterate_length(const Sequence& s, Index k, Index requested, const char* op) {
  if (k == 0) throw ArgumentError(std::string(op) + ": k must be >= 1");
  const Index length = requested == 0 ? s.size() / k : requested;
  if (length == 0 || length > s.size() / k)
    throw TruncationError(std::string(op) + ": " + std::to_string(length == 0 ? 1 : length) +
                          " output terms with k=" + std::to_string(k) + " need " +
                          std::to_string(k * std::max<Index>(length, 1)) + " input terms, have " +
                          std::to_string(s.size()));
  return length;
}

}  // namespace detail

// F_{T^k}(n) = F_T(kn). Output length is `length`, or floor(N/k) when 0.
inline Sequence iterate_fix(const Sequence& f, Index k, Index length = 0) {
  require_view(f, View::Fix, "iterate_fix");
  length = detail::iterate_length(f, k, length, "iterate_fix");
  std::vector<Integer> out;
  for (Index n = 1; n <= length; ++n) out.push_back(f[k * n]);
  return Sequence(View::Fix, std::move(out));
}

// Orbits of T^k computed directly from the orbits of T:
//   O_{T^k}(n) = sum_{d | k_J} (k/d) O_T(kn/d),
// where k_J is the part of k supported on primes that do not divide n.
// Output length is `length`, or floor(N/k) when 0.
inline Sequence iterate_orbits(const Sequence& o, Index k, Index length = 0) {
  require_view(o, View::Orbit, "iterate_orbits");
  length = detail::iterate_length(o, k, length, "iterate_orbits");
  const Factorization kf = factorize(k);
  std::vector<Integer> out;
  for (Index n = 1; n <= length; ++n) {
    Index coprime_part = 1;
    for (const auto& [p, e] : kf.factors)
      if (n % p != 0)
        for (Index i = 0; i < e; ++i) coprime_part *= p;
    Integer total = 0;
    for (Index d : divisors(coprime_part)) total += (k / d) * o[k * n / d];
    out.push_back(std::move(total));
  }
  return Sequence(View::Orbit, std::move(out));
}

}  // namespace orbitcount
