#pragma once

// Brute-force ground truth. Orbit sequences are realized as explicit unions of
// cycles, and products and iterates are computed by stepping points around
// those cycles until they return. Nothing here uses the divisor formulas of
// operators.hpp.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "numtheory.hpp"
#include "sequence.hpp"

namespace orbitcount::oracle {

// A map given by its cycle structure: cycles()[L] is the number of cycles of
// length L. Lengths beyond realized_length() are unknown, not absent.
class CycleSystem {
 public:
  CycleSystem(std::map<Index, Integer> cycles, Index realized_length)
      : cycles_(std::move(cycles)), realized_length_(realized_length) {
    for (auto it = cycles_.begin(); it != cycles_.end();) {
      if (it->second < 0) throw ArgumentError("CycleSystem: negative cycle count");
      if (it->first == 0 || it->first > realized_length_) throw ArgumentError("CycleSystem: bad cycle length");
      it = it->second == 0 ? cycles_.erase(it) : std::next(it);
    }
  }

  const std::map<Index, Integer>& cycles() const { return cycles_; }
  Index realized_length() const { return realized_length_; }

  Integer total_points() const {
    Integer total = 0;
    for (const auto& [length, count] : cycles_) total += length * count;
    return total;
  }

 private:
  std::map<Index, Integer> cycles_;
  Index realized_length_;
};

inline CycleSystem build(const Sequence& orbits) {
  require_view(orbits, View::Orbit, "oracle::build");
  std::map<Index, Integer> cycles;
  for (Index n = 1; n <= orbits.size(); ++n)
    if (orbits[n] != 0) cycles[n] = orbits[n];
  return CycleSystem(std::move(cycles), orbits.size());
}

// Points x with T^n(x) = x: a point on an L-cycle returns after n steps
// exactly when L divides n.
inline Integer count_fixed(const CycleSystem& sys, Index n) {
  if (n == 0 || n > sys.realized_length())
    throw TruncationError("count_fixed: n=" + std::to_string(n) + " outside realized range 1.." +
                          std::to_string(sys.realized_length()));
  Integer total = 0;
  for (const auto& [length, count] : sys.cycles())
    if (n % length == 0) total += length * count;
  return total;
}

namespace detail {

// Lengths of the cycles of the point set produced by tracing a
// permutation given as a successor function on 0..points-1.
template <typename Step>
std::vector<Index> trace_cycles(Index points, Step step) {
  std::vector<bool> seen(points, false);
  std::vector<Index> lengths;
  for (Index start = 0; start < points; ++start) {
    if (seen[start]) continue;
    Index length = 0;
    Index x = start;
    do {
      seen[x] = true;
      x = step(x);
      ++length;
    } while (x != start);
    lengths.push_back(length);
  }
  return lengths;
}

}  // namespace detail

// Orbit counts of A x B up to length N. Each pair of cycles (L1, L2) is traced
// as the L1*L2 points (i, j) -> (i+1 mod L1, j+1 mod L2); the resulting cycle
// lengths are weighted by the number of such cycle pairs.
inline Sequence simulate_product(const CycleSystem& a, const CycleSystem& b, Index length) {
  if (length == 0 || length > a.realized_length() || length > b.realized_length())
    throw TruncationError("simulate_product: both systems must be realized to length " + std::to_string(length));
  std::vector<Integer> counts(length);
  for (const auto& [l1, c1] : a.cycles()) {
    if (l1 > length) break;
    for (const auto& [l2, c2] : b.cycles()) {
      // Product orbits are at least as long as either factor's.
      if (l2 > length) break;
      const auto lengths = detail::trace_cycles(l1 * l2, [l1 = l1, l2 = l2](Index x) {
        const Index i = x / l2, j = x % l2;
        return ((i + 1) % l1) * l2 + (j + 1) % l2;
      });
      for (Index n : lengths)
        if (n <= length) counts[n - 1] += c1 * c2;
    }
  }
  return Sequence(View::Orbit, std::move(counts));
}

// Orbit counts of A^k up to length N, by stepping k places around each cycle.
inline Sequence simulate_iterate(const CycleSystem& a, Index k, Index length) {
  if (k == 0) throw ArgumentError("simulate_iterate: k must be >= 1");
  if (length == 0 || k * length > a.realized_length())
    throw TruncationError("simulate_iterate: system realized to length " + std::to_string(a.realized_length()) +
                          ", need " + std::to_string(k * length));
  std::vector<Integer> counts(length);
  for (const auto& [l, c] : a.cycles()) {
    // Under T^k an L-cycle breaks into orbits of length at least L/k.
    if (l > k * length) break;
    const auto lengths = detail::trace_cycles(l, [l = l, k](Index x) { return (x + k) % l; });
    for (Index n : lengths)
      if (n <= length) counts[n - 1] += c;
  }
  return Sequence(View::Orbit, std::move(counts));
}

// Cyclic subgroups of C_n x C_n: tally elements by order d, then each cyclic
// subgroup of order d has phi(d) generators.
inline Integer cyclic_subgroup_count(Index n) {
  require_positive(n, "cyclic_subgroup_count");
  std::map<Index, Index> elements_of_order;
  for (Index a = 0; a < n; ++a) {
    const Index order_a = n / std::gcd(a, n);
    for (Index b = 0; b < n; ++b) ++elements_of_order[std::lcm(order_a, n / std::gcd(b, n))];
  }
  Integer total = 0;
  for (const auto& [d, count] : elements_of_order) total += count / euler_phi(d);
  return total;
}

// Hermite forms [[a, b], [0, c]] with ac = n, 0 <= b < a and gcd(a, b, c) = 1.
inline Integer primitive_lattice_count(Index n) {
  require_positive(n, "primitive_lattice_count");
  Integer total = 0;
  for (Index a : divisors(n)) {
    const Index c = n / a;
    for (Index b = 0; b < a; ++b)
      if (std::gcd(std::gcd(a, b), c) == 1) ++total;
  }
  return total;
}

}  // namespace orbitcount::oracle
