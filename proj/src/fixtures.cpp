#include "milreg/fixtures.hpp"

namespace milreg::fixtures {

namespace {

using torus::cplx;
using torus::DivisorPoint;

cplx at(const Torus& T, double s, double t) { return s + t * T.tau; }

bool far_from(const std::vector<DivisorPoint>& pts, cplx z, const Torus& T, double gap) {
  for (const auto& p : pts)
    if (torus::torus_distance(p.z, z, T) < gap) return false;
  return true;
}

}  // namespace

EllipticFunction steinberg_f(const Torus& T) {
  const cplx a = at(T, 0.13, 0.21), b = at(T, 0.58, 0.34), e = at(T, 0.27, 0.83);
  const cplx c = at(T, 0.36, 0.72), g = at(T, 0.81, 0.47);
  return EllipticFunction(EllDivisor({{a, 1}, {b, 1}, {e, 1}, {c, -1}, {g, -1}, {a + b + e - c - g, -1}}), T);
}

EllDivisor random_divisor(std::mt19937_64& rng, const Torus& T, int zeros, double min_gap) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    std::vector<DivisorPoint> pts;
    cplx sum = 0.0;
    bool ok = true;
    for (int i = 0; i < 2 * zeros - 1 && ok; ++i) {
      const cplx z = at(T, u(rng), u(rng));
      ok = far_from(pts, z, T, min_gap);
      const int n = i < zeros ? 1 : -1;
      pts.push_back({z, n});
      sum += static_cast<double>(n) * z;
    }
    if (!ok || !far_from(pts, sum, T, min_gap)) continue;
    pts.push_back({sum, -1});
    return EllDivisor(std::move(pts));
  }
}

std::pair<EllipticFunction, EllipticFunction> random_disjoint_pair(std::mt19937_64& rng, const Torus& T,
                                                                   double min_gap) {
  for (;;) {
    const EllDivisor d1 = random_divisor(rng, T, 2, min_gap);
    const EllDivisor d2 = random_divisor(rng, T, 2, min_gap);
    bool ok = true;
    for (const auto& p : d2.points()) ok = ok && far_from(d1.points(), p.z, T, min_gap);
    if (ok) return {EllipticFunction(d1, T), EllipticFunction(d2, T)};
  }
}

std::vector<CycleWithFunctions> j_panel(const Torus& T) {
  std::mt19937_64 rng(20260419);
  std::vector<CycleWithFunctions> out;
  for (int i = 0; i < 6; ++i) {
    auto [f, g] = random_disjoint_pair(rng, T);
    out.push_back({regulator::TorusCarrier{{f, g}}, 1});
  }
  return out;
}

std::vector<DdbarTriple> ddbar_panel() {
  using regulator::TrigPoly;
  std::vector<DdbarTriple> out;
  {
    const Torus T1 = Torus::make({0.0, 1.0}), T2 = Torus::make({0.5, 1.1});
    const cplx p(0.23, 0.31), q(0.37, 0.18);
    EllipticFunction f(EllDivisor({{p, 1}, {-p, 1}, {0.0, -2}}), T1);
    EllipticFunction g(EllDivisor({{q, 1}, {-q, 1}, {0.0, -2}}), T2);
    SplitEta eta{{{1, TrigPoly{{{1, 0, 0.7}, {0, 1, cplx(0, 0.4)}, {1, 1, 0.3}}},
                   TrigPoly{{{1, 0, 0.5}, {0, -1, cplx(0.6, 0.2)}, {0, 0, 0.9}}}}}};
    out.push_back({f, g, eta});
  }
  {
    const Torus T1 = Torus::make({0.2, 1.05}), T2 = Torus::make({0.0, 1.0});
    const cplx a = at(T1, 0.15, 0.62), b = at(T1, 0.71, 0.28), c = at(T1, 0.44, 0.09);
    const cplx q1 = at(T2, 0.33, 0.57), q2 = at(T2, 0.81, 0.14), r = at(T2, 0.52, 0.76);
    EllipticFunction f(EllDivisor({{a, 1}, {b, 1}, {c, -1}, {a + b - c, -1}}), T1);
    EllipticFunction g(EllDivisor({{q1, 1}, {q2, 1}, {r, -1}, {q1 + q2 - r, -1}}), T2, cplx(0.8, 0.3));
    SplitEta eta{{{2, TrigPoly{{{0, 1, 0.6}, {-1, 1, cplx(0.2, -0.3)}}}, TrigPoly{{{1, 0, cplx(0.0, 0.5)}, {0, 0, 0.4}}}}}};
    out.push_back({f, g, eta});
  }
  {
    const Torus T1 = Torus::make({-0.3, 1.2}), T2 = Torus::make({0.1, 0.95});
    const cplx a = at(T1, 0.29, 0.41), b = at(T1, 0.64, 0.83), c = at(T1, 0.12, 0.17);
    const cplx q = at(T2, 0.38, 0.26), r = at(T2, 0.77, 0.61);
    EllipticFunction f(EllDivisor({{a, 1}, {b, 1}, {c, -1}, {a + b - c, -1}}), T1, 1.7);
    EllipticFunction g(EllDivisor({{q, 2}, {r, -1}, {2.0 * q - r, -1}}), T2);
    SplitEta eta{{{1, TrigPoly{{{1, -1, 0.5}, {0, 0, 0.3}}}, TrigPoly{{{0, 1, 0.8}}}},
                  {2, TrigPoly{{{1, 0, cplx(0.3, 0.1)}}}, TrigPoly{{{1, 1, 0.6}, {-1, 0, cplx(0.0, 0.2)}}}}}};
    out.push_back({f, g, eta});
  }
  return out;
}

}  // namespace milreg::fixtures
