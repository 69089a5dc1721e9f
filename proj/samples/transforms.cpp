// Walks one system through the three views, builds a product and an iterate,
// and checks the product against a brute-force simulation.

#include <iostream>

#include <orbitcount/builtins.hpp>
#include <orbitcount/operators.hpp>
#include <orbitcount/oracle.hpp>
#include <orbitcount/transforms.hpp>

using namespace orbitcount;

int main() {
  const Index N = 12;

  const Sequence fix = builtin({"golden_mean", {}}, N);
  const Sequence orbits = fix_to_orbit(fix);
  const Sequence monoid = euler(orbits);
  std::cout << "golden mean shift\n"
            << "  fixed points  " << to_string(fix) << '\n'
            << "  orbits        " << to_string(orbits) << '\n'
            << "  monoid        " << to_string(monoid) << '\n';

  const Sequence zeta = zeta_sequence(N);
  const Sequence product = product_orbits(orbits, zeta);
  std::cout << "product with one orbit of every length\n  " << to_string(product) << '\n';

  const Sequence simulated = oracle::simulate_product(oracle::build(orbits), oracle::build(zeta), N);
  std::cout << "  simulation " << (simulated == product ? "agrees" : "DISAGREES") << '\n';

  const Sequence squared = iterate_orbits(orbits, 2);
  std::cout << "orbits of the square map\n  " << to_string(squared) << '\n';

  // Not every nonnegative sequence counts fixed points of something.
  const auto verdict = realizable_as_fix(Sequence::of(View::Fix, {1, 2, 3}));
  std::cout << "is 1 2 3 a fixed-point sequence? "
            << (verdict ? "yes" : "no, " + std::string(failure_name(*verdict.failure)) + " at n=" +
                                      std::to_string(verdict.index))
            << '\n';
  return simulated == product ? 0 : 1;
}
