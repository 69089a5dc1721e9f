#pragma once

// Named example sequences. Each entry produces its first N terms in the view
// where it is most naturally defined; converting to the other views is the
// job of transforms.hpp.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "numtheory.hpp"
#include "sequence.hpp"

namespace orbitcount {

using BuiltinParam = std::variant<std::int64_t, PrimeSet>;

struct BuiltinSpec {
  std::string name;
  std::map<std::string, BuiltinParam> params;
};

enum class ParamKind { Integer, Primes };

struct BuiltinInfo {
  std::string name;
  View view;
  std::vector<std::pair<std::string, ParamKind>> params;
  std::string summary;
};

inline const std::vector<BuiltinInfo>& builtin_catalogue() {
  static const std::vector<BuiltinInfo> catalogue = {
      {"zeta", View::Orbit, {}, "one orbit of every length"},
      {"delta", View::Orbit, {}, "a single fixed point"},
      {"id_orbits", View::Orbit, {}, "n orbits of length n"},
      {"geometric", View::Orbit, {{"p", ParamKind::Integer}}, "p^n orbits of length n"},
      {"s_P", View::Orbit, {{"P", ParamKind::Primes}}, "1 if n is coprime to every prime in P"},
      {"feigenbaum", View::Orbit, {}, "1 at powers of 2"},
      {"ternary", View::Orbit, {}, "1 at powers of 3"},
      {"golden_mean", View::Fix, {}, "Lucas numbers"},
      {"full_shift", View::Fix, {{"a", ParamKind::Integer}}, "a^n"},
      {"dual_rational", View::Fix, {{"a", ParamKind::Integer}, {"b", ParamKind::Integer}}, "b^n - a^n"},
      {"localized_23", View::Fix, {}, "3-part of 2^n - 1"},
      {"s_integer_23", View::Fix, {}, "2^n - 1 with its 3-part removed"},
      {"s_part_seq", View::Plain, {{"S", ParamKind::Primes}}, "S-part of n"},
      {"a_S", View::Plain, {{"S", ParamKind::Primes}}, "prod over p in S of ((p+1)|n|_p^-1 - 2)/(p-1)"},
  };
  return catalogue;
}

inline const BuiltinInfo* find_builtin(const std::string& name) {
  for (const auto& info : builtin_catalogue())
    if (info.name == name) return &info;
  return nullptr;
}

namespace detail {

inline std::int64_t int_param(const BuiltinSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw ArgumentError(spec.name + ": missing parameter '" + key + "'");
  if (const auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
  throw ArgumentError(spec.name + ": parameter '" + key + "' must be an integer");
}

inline const PrimeSet& primes_param(const BuiltinSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw ArgumentError(spec.name + ": missing parameter '" + key + "'");
  if (const auto* v = std::get_if<PrimeSet>(&it->second)) return *v;
  throw ArgumentError(spec.name + ": parameter '" + key + "' must be a prime set");
}

template <typename F>
std::vector<Integer> tabulate(Index length, F&& term) {
  std::vector<Integer> out;
  out.reserve(length);
  for (Index n = 1; n <= length; ++n) out.emplace_back(term(n));
  return out;
}

inline bool is_power_of(Index n, Index base) {
  while (n % base == 0) n /= base;
  return n == 1;
}

inline Integer three_part(const Integer& x) { return ipow(Integer(3), valuation(x, 3)); }

}  // namespace detail

inline Sequence zeta_sequence(Index length) {
  return Sequence(View::Orbit, std::vector<Integer>(length, Integer(1)));
}

inline Sequence delta_sequence(Index length) {
  std::vector<Integer> terms(length, Integer(0));
  if (length > 0) terms[0] = 1;
  return Sequence(View::Orbit, std::move(terms));
}

inline Sequence s_p_sequence(const PrimeSet& excluded, Index length) {
  return Sequence(View::Orbit, detail::tabulate(length, [&](Index n) {
                    for (Index p : factorize(n).primes())
                      if (excluded.contains(p)) return 0;
                    return 1;
                  }));
}

inline Sequence s_part_sequence(const PrimeSet& s, Index length) {
  return Sequence(View::Plain, detail::tabulate(length, [&](Index n) { return part(n, s); }));
}

inline RationalSequence a_s_rational(const PrimeSet& s, Index length) {
  std::vector<Rational> terms;
  for (Index n = 1; n <= length; ++n) {
    // Primes of S not dividing n contribute ((p+1) - 2)/(p-1) = 1.
    Rational term = 1;
    for (const auto& [p, e] : factorize(n).factors) {
      if (!s.contains(p)) continue;
      term *= Rational(Integer(p + 1) * ipow(p, e) - 2, Integer(p - 1));
    }
    terms.push_back(term);
  }
  return RationalSequence(std::move(terms));
}

inline Sequence builtin(const BuiltinSpec& spec, Index length) {
  if (length == 0) throw ArgumentError(spec.name + ": number of terms must be >= 1");
  const BuiltinInfo* info = find_builtin(spec.name);
  if (info == nullptr) throw ArgumentError("unknown builtin sequence '" + spec.name + "'");
  for (const auto& [key, value] : spec.params) {
    bool known = false;
    for (const auto& p : info->params) known = known || p.first == key;
    if (!known) throw ArgumentError(spec.name + ": unexpected parameter '" + key + "'");
  }

  using detail::tabulate;
  const std::string& name = spec.name;

  if (name == "zeta") return zeta_sequence(length);
  if (name == "delta") return delta_sequence(length);
  if (name == "id_orbits") return Sequence(View::Orbit, tabulate(length, [](Index n) { return n; }));
  if (name == "geometric") {
    const auto p = detail::int_param(spec, "p");
    if (p < 1) throw ArgumentError("geometric: p must be >= 1");
    return Sequence(View::Orbit, tabulate(length, [&](Index n) { return ipow(Index(p), n); }));
  }
  if (name == "s_P") return s_p_sequence(detail::primes_param(spec, "P"), length);
  if (name == "feigenbaum")
    return Sequence(View::Orbit, tabulate(length, [](Index n) { return detail::is_power_of(n, 2) ? 1 : 0; }));
  if (name == "ternary")
    return Sequence(View::Orbit, tabulate(length, [](Index n) { return detail::is_power_of(n, 3) ? 1 : 0; }));
  if (name == "golden_mean") {
    std::vector<Integer> lucas;
    for (Index n = 1; n <= length; ++n) {
      if (n == 1) lucas.emplace_back(1);
      else if (n == 2) lucas.emplace_back(3);
      else lucas.push_back(lucas[n - 2] + lucas[n - 3]);
    }
    return Sequence(View::Fix, std::move(lucas));
  }
  if (name == "full_shift") {
    const auto a = detail::int_param(spec, "a");
    if (a < 2) throw ArgumentError("full_shift: a must be >= 2");
    return Sequence(View::Fix, tabulate(length, [&](Index n) { return ipow(Index(a), n); }));
  }
  if (name == "dual_rational") {
    const auto a = detail::int_param(spec, "a");
    const auto b = detail::int_param(spec, "b");
    if (!(b > a && a > 0) || std::gcd(a, b) != 1)
      throw ArgumentError("dual_rational: need coprime b > a > 0");
    return Sequence(View::Fix,
                    tabulate(length, [&](Index n) { return ipow(Index(b), n) - ipow(Index(a), n); }));
  }
  if (name == "localized_23")
    return Sequence(View::Fix, tabulate(length, [](Index n) { return detail::three_part(ipow(2, n) - 1); }));
  if (name == "s_integer_23")
    return Sequence(View::Fix, tabulate(length, [](Index n) {
                      const Integer x = ipow(2, n) - 1;
                      return Integer(x / detail::three_part(x));
                    }));
  if (name == "s_part_seq") return s_part_sequence(detail::primes_param(spec, "S"), length);
  if (name == "a_S") {
    const auto rational = a_s_rational(detail::primes_param(spec, "S"), length);
    std::vector<Integer> terms;
    for (Index n = 1; n <= length; ++n) {
      const Rational& q = rational[n];
      if (boost::multiprecision::denominator(q) != 1)
        throw ArgumentError("a_S: term " + std::to_string(n) + " is not an integer");
      terms.push_back(boost::multiprecision::numerator(q));
    }
    return Sequence(View::Plain, std::move(terms));
  }
  throw ArgumentError("unknown builtin sequence '" + name + "'");
}

}  // namespace orbitcount
