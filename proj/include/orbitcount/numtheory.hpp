#pragma once

// Elementary arithmetic functions by trial division. Every argument used by
// the library is at desk scale (n up to a few times 10^4), so no sieve or
// probabilistic primality test is involved.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace orbitcount {

inline void require_positive(Index n, const char* what) {
  if (n == 0) throw ArgumentError(std::string(what) + ": argument must be >= 1");
}

inline bool is_prime(Index n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Index d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// A set of primes that is either finite or the complement of a finite set.
class PrimeSet {
 public:
  enum class Mode { Finite, Cofinite };

  PrimeSet() = default;

  static PrimeSet finite(std::set<Index> primes) { return PrimeSet(Mode::Finite, std::move(primes)); }
  static PrimeSet finite(std::initializer_list<Index> primes) { return finite(std::set<Index>(primes)); }
  static PrimeSet cofinite(std::set<Index> excluded) { return PrimeSet(Mode::Cofinite, std::move(excluded)); }
  static PrimeSet cofinite(std::initializer_list<Index> excluded) { return cofinite(std::set<Index>(excluded)); }
  static PrimeSet empty() { return PrimeSet(); }
  static PrimeSet all() { return cofinite(std::set<Index>{}); }

  Mode mode() const { return mode_; }
  bool is_finite() const { return mode_ == Mode::Finite; }
  // The listed primes: members when finite, exclusions when cofinite.
  const std::set<Index>& listed() const { return listed_; }

  bool contains(Index p) const {
    if (!is_prime(p)) return false;
    const bool listed = listed_.count(p) != 0;
    return is_finite() ? listed : !listed;
  }

  PrimeSet complement() const {
    return PrimeSet(is_finite() ? Mode::Cofinite : Mode::Finite, listed_);
  }

  // Members no larger than bound, ascending.
  std::vector<Index> members_up_to(Index bound) const {
    std::vector<Index> out;
    for (Index p = 2; p <= bound; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

  // "2,3" for finite sets, "co:2,3" for cofinite ones.
  std::string str() const {
    std::string out = is_finite() ? "" : "co:";
    bool first = true;
    for (Index p : listed_) {
      if (!first) out += ',';
      out += std::to_string(p);
      first = false;
    }
    return out;
  }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  PrimeSet(Mode mode, std::set<Index> listed) : mode_(mode), listed_(std::move(listed)) {
    for (Index p : listed_)
      if (!is_prime(p)) throw ArgumentError("PrimeSet: " + std::to_string(p) + " is not prime");
  }

  Mode mode_ = Mode::Finite;
  std::set<Index> listed_;
};

struct PrimePower {
  Index prime;
  Index exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization, primes strictly ascending, exponents >= 1.
struct Factorization {
  std::vector<PrimePower> factors;

  Index expand() const {
    Index n = 1;
    for (const auto& [p, e] : factors)
      for (Index i = 0; i < e; ++i) n *= p;
    return n;
  }

  std::vector<Index> primes() const {
    std::vector<Index> out;
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  Index exponent_of(Index p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline Factorization factorize(Index n) {
  require_positive(n, "factorize");
  Factorization out;
  for (Index p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    Index e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

inline std::vector<Index> divisors(Index n) {
  require_positive(n, "divisors");
  std::vector<Index> small, large;
  for (Index d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int mobius(Index n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline Index euler_phi(Index n) {
  require_positive(n, "euler_phi");
  Index phi = n;
  for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
  return phi;
}

inline Integer sigma_k(Index n, Index k) {
  require_positive(n, "sigma_k");
  Integer total = 0;
  for (Index d : divisors(n)) total += ipow(d, k);
  return total;
}

inline Integer sigma(Index n) { return sigma_k(n, 1); }

// Largest divisor of n supported on the primes of S.
inline Index part(Index n, const PrimeSet& s) {
  require_positive(n, "part");
  Index out = 1;
  for (const auto& [p, e] : factorize(n).factors)
    if (s.contains(p))
      for (Index i = 0; i < e; ++i) out *= p;
  return out;
}

// p-adic valuation of a nonzero big integer.
inline Index valuation(Integer x, Index p) {
  if (x == 0) throw ArgumentError("valuation of zero");
  if (x < 0) x = -x;
  Index v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace orbitcount
