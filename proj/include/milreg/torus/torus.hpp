#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace milreg::torus {

using cplx = std::complex<double>;

// C / (Z + tau Z). R bounds the number of lattice rows summed in closed form
// (rows n = +-1..+-R, each row summed over all m).
struct Torus {
  cplx tau{0.0, 1.0};
  int R = 60;

  // Throws DomainError(InvalidTorus) unless Im tau > 0 and R >= 1.
  static Torus make(cplx tau, int R = 60);
};

cplx sigma(cplx z, const Torus& T);
double log_abs_sigma(cplx z, const Torus& T);
// Throws DomainError(LatticePoint) at a lattice point.
cplx zeta_w(cplx z, const Torus& T);

struct QuasiPeriods {
  cplx eta1;
  cplx eta2;
};
QuasiPeriods quasi_periods(const Torus& T);

// Writes z = s + t tau.
std::pair<double, double> lattice_coords(cplx z, const Torus& T);
// |z - w| minimised over lattice translates.
double torus_distance(cplx z, cplx w, const Torus& T);

struct DivisorPoint {
  cplx z;
  int n = 0;
};

// sum n_i = 0 and sum n_i z_i = 0 as complex numbers (to 1e-9).
class EllDivisor {
 public:
  EllDivisor() = default;
  // Throws DomainError(InvalidDivisor) when the invariants fail or n_i = 0.
  explicit EllDivisor(std::vector<DivisorPoint> points);

  const std::vector<DivisorPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  EllDivisor negated() const;
  // Multiplicity at z (points compared up to 1e-12, not modulo the lattice).
  int order_at(cplx z) const;

 private:
  std::vector<DivisorPoint> points_;
};

EllDivisor divisor_sum(const EllDivisor& a, const EllDivisor& b);

// f(z) = c * prod sigma(z - z_i)^{n_i}.
class EllipticFunction {
 public:
  EllipticFunction(EllDivisor divisor, Torus T, cplx constant = 1.0);

  const EllDivisor& divisor() const { return divisor_; }
  const Torus& torus() const { return torus_; }
  cplx constant() const { return constant_; }

  // All three throw DomainError(OnDivisor) within 1e-13 of a divisor point.
  cplx value(cplx z) const;
  double log_abs(cplx z) const;
  // dz-coefficient of df/f.
  cplx dlog(cplx z) const;

  EllipticFunction inverse() const;
  EllipticFunction scaled(cplx c) const;

 private:
  void check_off_divisor(cplx z) const;
  EllDivisor divisor_;
  Torus torus_;
  cplx constant_;
};

EllipticFunction ell_multiply(const EllipticFunction& f, const EllipticFunction& g);
double ell_log_abs(const EllipticFunction& f, cplx z);
cplx ell_dlog(const EllipticFunction& f, cplx z);

}  // namespace milreg::torus
