#include <cmath>
#include <numbers>

#include "milreg/error.hpp"
#include "milreg/torus/torus.hpp"

namespace milreg::torus {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI{0.0, 2.0 * kPi};

// Row n of the lattice product contributes terms of size |q| max(|x|, 1/|x|)
// and |q| |z|^2; past this both are below double resolution.
bool row_negligible(double abs_q, double abs_x, cplx z) {
  const double reach = abs_q * std::max(abs_x, 1.0 / abs_x);
  const double quad = abs_q * 40.0 * (1.0 + std::norm(z));
  return reach < 1e-18 && quad < 1e-18;
}

}  // namespace

Torus Torus::make(cplx tau, int R) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
    throw DomainError(ErrorKind::InvalidTorus, "Im tau must be positive");
  if (R < 1) throw DomainError(ErrorKind::InvalidTorus, "lattice truncation R must be at least 1");
  return {tau, R};
}

// sigma(z) = sin(pi z)/pi * exp(pi^2 z^2 / 6)
//   * prod_{n>=1} (1 - q/x)(1 - q x)/(1 - q)^2 * exp(-4 pi^2 z^2 q/(1-q)^2),
// q = e^{2 pi i n tau}, x = e^{2 pi i z}: each lattice row summed exactly.
cplx sigma(cplx z, const Torus& T) {
  const cplx x = std::exp(kTwoPiI * z);
  const double ax = std::abs(x);
  cplx prod = std::sin(kPi * z) / kPi;
  cplx expo = kPi * kPi * z * z / 6.0;
  for (int n = 1; n <= T.R; ++n) {
    const cplx q = std::exp(kTwoPiI * static_cast<double>(n) * T.tau);
    if (row_negligible(std::abs(q), ax, z)) break;
    const cplx one_q = 1.0 - q;
    prod *= (1.0 - q / x) * (1.0 - q * x) / (one_q * one_q);
    expo -= 4.0 * kPi * kPi * z * z * q / (one_q * one_q);
  }
  return prod * std::exp(expo);
}

double log_abs_sigma(cplx z, const Torus& T) {
  const cplx x = std::exp(kTwoPiI * z);
  const double ax = std::abs(x);
  double acc = std::log(std::abs(std::sin(kPi * z)) / kPi) + (kPi * kPi * z * z / 6.0).real();
  for (int n = 1; n <= T.R; ++n) {
    const cplx q = std::exp(kTwoPiI * static_cast<double>(n) * T.tau);
    if (row_negligible(std::abs(q), ax, z)) break;
    const cplx one_q = 1.0 - q;
    acc += std::log(std::abs(1.0 - q / x)) + std::log(std::abs(1.0 - q * x)) - 2.0 * std::log(std::abs(one_q)) -
           (4.0 * kPi * kPi * z * z * q / (one_q * one_q)).real();
  }
  return acc;
}

cplx zeta_w(cplx z, const Torus& T) {
  if (torus_distance(z, 0.0, T) < 1e-13)
    throw DomainError(ErrorKind::LatticePoint, "zeta has a pole at lattice points");
  const cplx x = std::exp(kTwoPiI * z);
  const double ax = std::abs(x);
  cplx acc = kPi * std::cos(kPi * z) / std::sin(kPi * z) + kPi * kPi * z / 3.0;
  for (int n = 1; n <= T.R; ++n) {
    const cplx q = std::exp(kTwoPiI * static_cast<double>(n) * T.tau);
    if (row_negligible(std::abs(q), ax, z)) break;
    const cplx one_q = 1.0 - q;
    acc += kTwoPiI * (q / x) / (1.0 - q / x) - kTwoPiI * (q * x) / (1.0 - q * x) -
           8.0 * kPi * kPi * z * q / (one_q * one_q);
  }
  return acc;
}

QuasiPeriods quasi_periods(const Torus& T) { return {2.0 * zeta_w(0.5, T), 2.0 * zeta_w(T.tau / 2.0, T)}; }

std::pair<double, double> lattice_coords(cplx z, const Torus& T) {
  const double t = z.imag() / T.tau.imag();
  return {z.real() - t * T.tau.real(), t};
}

double torus_distance(cplx z, cplx w, const Torus& T) {
  const auto [s, t] = lattice_coords(z - w, T);
  const double m0 = std::round(s);
  const double n0 = std::round(t);
  double best = std::numeric_limits<double>::infinity();
  for (int dm = -1; dm <= 1; ++dm)
    for (int dn = -1; dn <= 1; ++dn) {
      const cplx d = (z - w) - (m0 + dm) - (n0 + dn) * T.tau;
      best = std::min(best, std::abs(d));
    }
  return best;
}

}  // namespace milreg::torus
