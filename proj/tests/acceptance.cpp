// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <orbitcount/identities.hpp>

using namespace orbitcount;

namespace {

// Collects the failing clauses of one criterion.
struct Verdict {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void require(const CheckResult& r, const std::string& what) {
    if (!r.pass) failures.push_back(what + " (n=" + std::to_string(r.first_failure) + ": " + r.detail + ")");
  }
};

Sequence orbits_of(std::initializer_list<long long> values) { return Sequence::of(View::Orbit, values); }

// Prefix check against literal values.
CheckResult prefix(const Sequence& s, std::initializer_list<long long> expected) {
  Index n = 1;
  for (long long v : expected) {
    if (n > s.size()) return CheckResult::fail(n, "sequence too short");
    if (s[n] != v) return CheckResult::fail(n, s[n].str() + " != " + std::to_string(v));
    ++n;
  }
  return CheckResult::ok();
}

template <typename Expected>
CheckResult termwise(const Sequence& s, Index length, Expected expected) {
  for (Index n = 1; n <= length; ++n) {
    const Integer want = expected(n);
    if (s[n] != want) return CheckResult::fail(n, s[n].str() + " != " + want.str());
  }
  return CheckResult::ok();
}

Verdict c1_product_series() {
  Verdict v;
  const Index N = 200;
  const auto zeta = zeta_sequence(N);
  const auto tt = product_orbits(zeta, zeta);
  v.require(prefix(tt, {1, 4, 5, 10, 7, 20, 9, 22}), "prefix");
  v.require(termwise(tt, N,
                     [](Index n) {
                       Integer total = 0;
                       for (Index d : divisors(n)) total += sigma(d) * mobius(n / d) * mobius(n / d);
                       return total;
                     }),
            "sigma/mu^2 convolution");
  const auto quotient = div(mul(mul(zeta_poly(N), zeta_poly(N)), zeta_shift(1, N)), zeta_dilated_shift(2, 0, N));
  v.require(first_difference(from_sequence(tt), quotient) == 0, "Dirichlet quotient");
  return v;
}

Verdict c2_iterate_id() {
  Verdict v;
  const auto id = [](Index length) { return builtin({"id_orbits", {}}, length); };
  v.require(prefix(iterate_orbits(id(16), 2), {5, 8, 15, 16, 25, 24, 35, 32}), "k=2 prefix");
  v.require(termwise(iterate_orbits(id(200), 4, 50), 50,
                     [](Index n) { return Integer(n % 2 == 0 ? 16 * n : 21 * n); }),
            "k=4 closed form");
  for (Index p : {2, 3, 5})
    v.require(termwise(iterate_orbits(id(p * 50), p, 50), 50,
                       [p](Index n) { return Integer(n % p == 0 ? p * p * n : (p * p + 1) * n); }),
              "k=" + std::to_string(p) + " closed form");
  return v;
}

Verdict c3_feigenbaum() {
  Verdict v;
  const auto feigenbaum = builtin({"feigenbaum", {}}, 256);
  v.require(termwise(orbit_to_fix(feigenbaum), 256,
                     [](Index n) { return Integer(2 * (n & (~n + 1)) - 1); }),
            "fix = 2|n|_2 - 1");
  v.require(termwise(iterate_orbits(feigenbaum, 2, 128), 128,
                     [](Index n) {
                       if (n == 1) return Integer(3);
                       return Integer((n & (n - 1)) == 0 ? 2 : 0);
                     }),
            "square of the map");
  return v;
}

Verdict c4_euler_examples() {
  Verdict v;
  v.require(prefix(euler(zeta_sequence(10)), {1, 2, 3, 5, 7, 11, 15, 22, 30, 42}), "partitions");

  const auto golden = euler(fix_to_orbit(builtin({"golden_mean", {}}, 30)));
  v.require(termwise(golden, 30,
                     [](Index n) {
                       Integer a = 1, b = 1;  // F(1), F(2)
                       for (Index i = 1; i < n; ++i) {
                         const Integer c = a + b;
                         a = b;
                         b = c;
                       }
                       return b;  // F(n+1)
                     }),
            "golden mean = Fibonacci(n+1)");
  v.require(golden[5] == 8, "golden mean G(5) = 8");

  for (std::int64_t a : {2, 3}) {
    const auto monoid = monoid_counts(zeta_from_fix(builtin({"full_shift", {{"a", a}}}, 20)));
    v.require(termwise(monoid, 20,
                       [a](Index n) { return ipow(Integer(a), n) - ipow(Integer(a), n - 1); }),
              "full shift a=" + std::to_string(a) + ": G(n) = a^n - a^(n-1)");
  }
  const auto dual = monoid_counts(zeta_from_fix(builtin({"dual_rational", {{"a", 2}, {"b", 3}}}, 20)));
  v.require(termwise(dual, 20, [](Index n) { return ipow(Integer(3), n - 1); }), "dual map G(n) = 3^(n-1)");
  return v;
}

Verdict c5_three_routes() {
  Verdict v;
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<Index> size(1, 40);
  for (int trial = 0; trial < 100; ++trial)
    v.require(detail::three_routes(detail::random_orbits(rng, size(rng), 4)), "trial " + std::to_string(trial));
  return v;
}

Verdict c6_oracle() {
  Verdict v;
  // Products: every pair of sequences in the terms <= 3 grid at each length
  // small enough to enumerate; iterates: the full grid at length 6, every k.
  for (Index length : {1, 2, 3}) {
    const auto grid = detail::all_orbit_sequences(length, 3);
    for (const auto& a : grid)
      for (const auto& b : grid)
        v.require(detail::compare(oracle::simulate_product(oracle::build(a), oracle::build(b), length),
                                  product_orbits(a, b), "grid product"),
                  "product grid length " + std::to_string(length));
  }
  for (const auto& o : detail::all_orbit_sequences(6, 3))
    for (Index k = 1; k <= 6; ++k)
      v.require(detail::compare(oracle::simulate_iterate(oracle::build(o), k, 6 / k), iterate_orbits(o, k),
                                "grid iterate"),
                "iterate grid k=" + std::to_string(k));
  // Long sparse sequences reach N = 12 with k up to 6.
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<Index> size(1, 12), power(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = size(rng), k = power(rng);
    const auto a = detail::random_orbits(rng, n, 3), b = detail::random_orbits(rng, n, 3);
    v.require(detail::compare(oracle::simulate_product(oracle::build(a), oracle::build(b), n), product_orbits(a, b),
                              "random product"),
              "random product " + std::to_string(trial));
    const auto o = detail::random_orbits(rng, k * n, 3);
    v.require(detail::compare(oracle::simulate_iterate(oracle::build(o), k, n), iterate_orbits(o, k, n),
                              "random iterate"),
              "random iterate " + std::to_string(trial));
  }
  if (v.failures.size() > 5) v.failures.resize(5);
  return v;
}

Verdict c7_subgroups_lattices() {
  Verdict v;
  const auto tt = product_orbits(zeta_sequence(60), zeta_sequence(60));
  v.require(termwise(tt, 60, [](Index n) { return oracle::cyclic_subgroup_count(n); }), "cyclic subgroups");
  v.require(termwise(tt, 60,
                     [](Index n) {
                       Integer total = 0;
                       for (Index d : divisors(n)) total += oracle::primitive_lattice_count(d);
                       return total;
                     }),
            "primitive lattices");
  return v;
}

Verdict c8_s_p_factorization() {
  Verdict v;
  const std::vector<PrimeSet> sets = {PrimeSet::empty(), PrimeSet::finite({2}), PrimeSet::finite({3}),
                                      PrimeSet::finite({2, 7})};
  for (const auto& p : sets)
    v.require(detail::compare(product_orbits(s_p_sequence(p, 100), s_p_sequence(p.complement(), 100)),
                              zeta_sequence(100), "s_P x s_P^c"),
              "P = {" + p.str() + "}");
  const auto found = factor_search(zeta_sequence(10), 10);
  v.require(found.pairs.size() == 16 && !found.overflow,
            "factor_search(zeta, 10) found " + std::to_string(found.pairs.size()) + " pairs");
  for (const auto& pair : found.pairs) {
    std::set<Index> excluded;
    for (Index p : {2, 3, 5, 7})
      if (pair.left[p] == 0) excluded.insert(p);
    const bool shape = pair.left == s_p_sequence(PrimeSet::finite(excluded), 10) &&
                       pair.right == s_p_sequence(PrimeSet::cofinite(excluded), 10);
    v.require(shape, "pair with left = " + to_string(pair.left) + " is not of s_P shape");
  }
  return v;
}

Verdict c9_s_2_times_zeta() {
  Verdict v;
  const Index N = 100;
  const auto product = product_orbits(s_p_sequence(PrimeSet::finite({2}), N), zeta_sequence(N));
  v.require(prefix(product, {1, 1, 5, 1, 7, 5, 9, 1, 17}), "prefix");
  // d_{SxT}(s) prod_{p != 2} (1 - p/p^s) = zeta(s) prod_{p != 2} (1 + 1/p^s)
  const auto others = PrimeSet::cofinite({2}).members_up_to(N);
  auto lhs = from_sequence(product);
  auto rhs = zeta_poly(N);
  for (Index p : others) {
    lhs = mul(lhs, sparse({{1, 1}, {p, -Rational(p)}}, N));
    rhs = mul(rhs, sparse({{1, 1}, {p, 1}}, N));
  }
  v.require(first_difference(lhs, rhs) == 0, "cleared Dirichlet identity");
  return v;
}

Verdict c10_dirichlet_lemmas() {
  Verdict v;
  const Index N = 100;
  for (const auto& s : {PrimeSet::finite({2}), PrimeSet::finite({3}), PrimeSet::finite({2, 3})}) {
    auto parts = from_sequence(s_part_sequence(s, N));
    auto as = from_sequence(builtin({"a_S", {{"S", s}}}, N));
    auto parts_rhs = zeta_poly(N), as_rhs = zeta_poly(N);
    for (Index p : s.members_up_to(N)) {
      const auto clear = sparse({{1, 1}, {p, -Rational(p)}}, N);
      parts = mul(parts, clear);
      as = mul(as, clear);
      parts_rhs = mul(parts_rhs, sparse({{1, 1}, {p, -1}}, N));
      as_rhs = mul(as_rhs, sparse({{1, 1}, {p, 1}}, N));
    }
    v.require(first_difference(parts, parts_rhs) == 0, "S-part series, S = {" + s.str() + "}");
    v.require(first_difference(as, as_rhs) == 0, "a_S series, S = {" + s.str() + "}");
  }
  const Index M = 60;
  for (const auto& [a, b] : std::vector<std::pair<long long, long long>>{{0, 1}, {1, 1}, {1, 2}}) {
    std::vector<Integer> ua, ub;
    for (Index n = 1; n <= M; ++n) {
      ua.push_back(ipow(Integer(n), a));
      ub.push_back(ipow(Integer(n), b));
    }
    const auto product = product_orbits(Sequence(View::Orbit, ua), Sequence(View::Orbit, ub));
    const auto lhs = mul(from_sequence(product), zeta_dilated_shift(2, a + b, M));
    const auto rhs = mul(mul(zeta_shift(a, M), zeta_shift(b, M)), zeta_shift(a + b + 1, M));
    v.require(first_difference(lhs, rhs) == 0,
              "Ramanujan (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return v;
}

Verdict c11_s_p_iterates() {
  Verdict v;
  for (const auto& p : {PrimeSet::empty(), PrimeSet::finite({2}), PrimeSet::finite({3}), PrimeSet::finite({2, 5})})
    for (Index k = 1; k <= 24; ++k) {
      const auto iterated = iterate_orbits(s_p_sequence(p, 24 * k), k, 24);
      v.require(termwise(iterated, 24, [&](Index n) { return detail::s_p_iterate_closed_form(p, k, n); }),
                "P = {" + p.str() + "}, k = " + std::to_string(k));
    }
  return v;
}

Verdict c12_asymptotics() {
  Verdict v;
  const double h = std::log(2.0);
  const auto orbits = fix_to_orbit(builtin({"full_shift", {{"a", 2}}}, 40));
  for (Index N : {20, 25, 30}) {
    const auto report = pnt_report(orbits, h, 1.0, N);
    const double ratio = report.pi_actual.convert_to<double>() / report.pi_predicted;
    std::ostringstream os;
    os << "pi ratio at N=" << N << " is " << ratio;
    v.require(std::abs(ratio - 1.0) <= 5.0 / static_cast<double>(N), os.str());
  }
  const double drift =
      pnt_report(orbits, h, 1.0, 30).mertens_minus_harmonic - pnt_report(orbits, h, 1.0, 20).mertens_minus_harmonic;
  v.require(std::abs(drift) < 1e-3, "Mertens drift " + std::to_string(drift));
  for (Index n = 2; n <= 40; ++n) {
    const double scaled = static_cast<double>(n) * orbits[n].convert_to<double>() / std::ldexp(1.0, int(n));
    v.require(std::abs(scaled - 1.0) <= 2.0 * static_cast<double>(n) * std::pow(2.0, -0.5 * double(n)),
              "prime orbit bound at n=" + std::to_string(n));
  }
  return v;
}

Verdict c13_round_trips() {
  Verdict v;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<Index> fix_size(1, 200), euler_size(1, 60);
  std::uniform_int_distribution<int> bound(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto o = detail::random_orbits(rng, fix_size(rng), bound(rng));
    const auto f = orbit_to_fix(o);
    v.require(detail::compare(fix_to_orbit(f), o, "orbit -> fix -> orbit"), "fix/orbit trial " + std::to_string(trial));
    v.require(detail::compare(orbit_to_fix(fix_to_orbit(f)), f, "fix -> orbit -> fix"),
              "orbit/fix trial " + std::to_string(trial));
    const auto e = detail::random_orbits(rng, euler_size(rng), bound(rng));
    const auto g = euler(e);
    v.require(detail::compare(euler_inverse(g), e, "euler_inverse(euler)"), "euler trial " + std::to_string(trial));
    v.require(detail::compare(euler(euler_inverse(g)), g, "euler(euler_inverse)"),
              "euler_inverse trial " + std::to_string(trial));
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"product series of zeta x zeta", c1_product_series},
      {"iterates of O(n) = n", c2_iterate_id},
      {"feigenbaum fix counts and square", c3_feigenbaum},
      {"Euler transform examples", c4_euler_examples},
      {"three routes to the monoid counts", c5_three_routes},
      {"oracle equivalence", c6_oracle},
      {"cyclic subgroups and primitive lattices", c7_subgroups_lattices},
      {"s_P factorization of zeta", c8_s_p_factorization},
      {"s_{2} x zeta series", c9_s_2_times_zeta},
      {"Dirichlet series lemmas", c10_dirichlet_lemmas},
      {"closed form for iterates of s_P", c11_s_p_iterates},
      {"growth asymptotics for the 2-shift", c12_asymptotics},
      {"realizability round trips", c13_round_trips},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = v.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2zu %s", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& f : v.failures) std::printf(" | %s", f.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
