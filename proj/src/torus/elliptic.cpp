#include <cmath>
#include <string>

#include "milreg/error.hpp"
#include "milreg/torus/torus.hpp"

namespace milreg::torus {

namespace {
constexpr double kSameTol = 1e-12;
constexpr double kDivisorSumTol = 1e-9;
constexpr double kOnDivisorTol = 1e-13;

std::string show(cplx z) { return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"; }
}  // namespace

EllDivisor::EllDivisor(std::vector<DivisorPoint> points) {
  for (const auto& p : points) {
    if (p.n == 0) continue;
    bool merged = false;
    for (auto& q : points_)
      if (std::abs(q.z - p.z) <= kSameTol) {
        q.n += p.n;
        merged = true;
        break;
      }
    if (!merged) points_.push_back(p);
  }
  std::erase_if(points_, [](const DivisorPoint& p) { return p.n == 0; });
  long deg = 0;
  cplx moment = 0.0;
  double scale = 1.0;
  for (const auto& p : points_) {
    deg += p.n;
    moment += static_cast<double>(p.n) * p.z;
    scale = std::max(scale, std::abs(static_cast<double>(p.n) * p.z));
  }
  if (deg != 0) throw DomainError(ErrorKind::InvalidDivisor, "degree " + std::to_string(deg) + " is not zero");
  if (std::abs(moment) > kDivisorSumTol * scale)
    throw DomainError(ErrorKind::InvalidDivisor, "sum n_i z_i = " + show(moment) + " is not zero");
}

EllDivisor EllDivisor::negated() const {
  EllDivisor out = *this;
  for (auto& p : out.points_) p.n = -p.n;
  return out;
}

int EllDivisor::order_at(cplx z) const {
  for (const auto& p : points_)
    if (std::abs(p.z - z) <= kSameTol) return p.n;
  return 0;
}

EllDivisor divisor_sum(const EllDivisor& a, const EllDivisor& b) {
  auto pts = a.points();
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return EllDivisor(std::move(pts));
}

EllipticFunction::EllipticFunction(EllDivisor divisor, Torus T, cplx constant)
    : divisor_(std::move(divisor)), torus_(T), constant_(constant) {
  if (constant_ == 0.0) throw DomainError(ErrorKind::ZeroConstant, "elliptic function with zero constant");
}

void EllipticFunction::check_off_divisor(cplx z) const {
  for (const auto& p : divisor_.points())
    if (torus_distance(z, p.z, torus_) < kOnDivisorTol)
      throw DomainError(ErrorKind::OnDivisor, "point " + show(z) + " lies on the divisor");
}

cplx EllipticFunction::value(cplx z) const {
  check_off_divisor(z);
  cplx acc = constant_;
  for (const auto& p : divisor_.points()) acc *= std::pow(sigma(z - p.z, torus_), p.n);
  return acc;
}

double EllipticFunction::log_abs(cplx z) const {
  check_off_divisor(z);
  double acc = std::log(std::abs(constant_));
  for (const auto& p : divisor_.points()) acc += p.n * log_abs_sigma(z - p.z, torus_);
  return acc;
}

cplx EllipticFunction::dlog(cplx z) const {
  check_off_divisor(z);
  cplx acc = 0.0;
  for (const auto& p : divisor_.points()) acc += static_cast<double>(p.n) * zeta_w(z - p.z, torus_);
  return acc;
}

EllipticFunction EllipticFunction::inverse() const {
  return EllipticFunction(divisor_.negated(), torus_, 1.0 / constant_);
}

EllipticFunction EllipticFunction::scaled(cplx c) const { return EllipticFunction(divisor_, torus_, constant_ * c); }

EllipticFunction ell_multiply(const EllipticFunction& f, const EllipticFunction& g) {
  if (f.torus().tau != g.torus().tau)
    throw DomainError(ErrorKind::InvalidTorus, "functions live on different tori");
  return EllipticFunction(divisor_sum(f.divisor(), g.divisor()), f.torus(), f.constant() * g.constant());
}

double ell_log_abs(const EllipticFunction& f, cplx z) { return f.log_abs(z); }
cplx ell_dlog(const EllipticFunction& f, cplx z) { return f.dlog(z); }

}  // namespace milreg::torus
