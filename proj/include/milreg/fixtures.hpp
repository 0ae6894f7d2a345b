#pragma once

#include <random>
#include <utility>
#include <vector>

#include "milreg/regulator/ddbar.hpp"
#include "milreg/regulator/regulator.hpp"
#include "milreg/torus/torus.hpp"

// Deterministic inputs shared by the CLI defaults, the acceptance runner and
// the tests.
namespace milreg::fixtures {

using regulator::CycleWithFunctions;
using regulator::SplitEta;
using torus::EllDivisor;
using torus::EllipticFunction;
using torus::Torus;

// Degree-3 function with zeros and poles off every symmetry of the lattice
// (a degree-2 f is symmetric about its divisor midpoint, so {f, 1 - f}
// would pair to zero for trivial reasons).
EllipticFunction steinberg_f(const Torus& T);

// zeros + zeros points of multiplicity +1 and -1, the last pole shifted so
// the divisor sums to zero, all points pairwise at torus distance >= min_gap.
EllDivisor random_divisor(std::mt19937_64& rng, const Torus& T, int zeros = 2, double min_gap = 0.08);
// Two functions whose divisors stay min_gap apart.
std::pair<EllipticFunction, EllipticFunction> random_disjoint_pair(std::mt19937_64& rng, const Torus& T,
                                                                   double min_gap = 0.08);

// Six {f, g} cycles on T for the J comparison.
std::vector<CycleWithFunctions> j_panel(const Torus& T);

struct DdbarTriple {
  EllipticFunction f;  // on E1
  EllipticFunction g;  // on E2
  SplitEta eta;
};
std::vector<DdbarTriple> ddbar_panel();

}  // namespace milreg::fixtures
