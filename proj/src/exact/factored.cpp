#include "milreg/exact/factored.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "milreg/error.hpp"

namespace milreg::exact {

const Rat& Place::root() const {
  if (!root_) throw std::logic_error("root() of the infinite place");
  return *root_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return *a.root_ < *b.root_;
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

FactoredRational FactoredRational::make(const Rat& constant, std::vector<Factor> factors) {
  if (constant.is_zero())
    throw DomainError(ErrorKind::ZeroConstant, "factored rational function with zero constant");
  std::map<Rat, long> merged;
  for (auto& f : factors) merged[f.root] += f.exponent;
  std::vector<Factor> out;
  out.reserve(merged.size());
  for (auto& [root, e] : merged)
    if (e != 0) out.push_back({root, e});
  return FactoredRational(constant, std::move(out));
}

long FactoredRational::degree() const {
  long d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

FactoredRational FactoredRational::inverse() const { return pow(-1); }

FactoredRational FactoredRational::pow(long exponent) const {
  std::vector<Factor> fs;
  if (exponent != 0)
    for (const auto& f : factors_) fs.push_back({f.root, f.exponent * exponent});
  return FactoredRational(constant_.pow(exponent), std::move(fs));
}

FactoredRational FactoredRational::operator-() const { return FactoredRational(-constant_, factors_); }

FactoredRational operator*(const FactoredRational& f, const FactoredRational& g) {
  std::vector<Factor> all = f.factors_;
  all.insert(all.end(), g.factors_.begin(), g.factors_.end());
  return FactoredRational::make(f.constant_ * g.constant_, std::move(all));
}

FactoredRational fr_multiply(const FactoredRational& f, const FactoredRational& g) { return f * g; }

long FactoredRational::valuation(const Place& p) const {
  if (p.is_infinity()) return -degree();
  for (const auto& f : factors_)
    if (f.root == p.root()) return f.exponent;
  return 0;
}

Rat FactoredRational::residue_value(const Place& p) const {
  // f * pi^{-v(f)} at p, with pi = t - a or 1/t. At infinity every
  // (1 - r/t)^e tends to one, leaving the constant.
  if (p.is_infinity()) return constant_;
  Rat acc = constant_;
  for (const auto& f : factors_)
    if (f.root != p.root()) acc *= (p.root() - f.root).pow(f.exponent);
  return acc;
}

Rat FactoredRational::evaluate(const Rat& x) const {
  Rat acc = constant_;
  for (const auto& f : factors_) {
    if (f.root == x)
      throw DomainError(ErrorKind::AtZeroOrPole, "evaluation at a zero or pole t = " + x.str());
    acc *= (x - f.root).pow(f.exponent);
  }
  return acc;
}

DenseRational FactoredRational::to_dense() const {
  Poly num = Poly::constant(constant_);
  Poly den = Poly::constant(Rat(1));
  for (const auto& f : factors_) {
    const Poly lin = Poly::linear_monic(f.root);
    const long reps = f.exponent > 0 ? f.exponent : -f.exponent;
    for (long i = 0; i < reps; ++i) (f.exponent > 0 ? num : den) = (f.exponent > 0 ? num : den) * lin;
  }
  return {num, den};
}

std::string FactoredRational::str() const {
  std::string s = constant_.str();
  if (!factors_.empty() && constant_.is_one()) s.clear();
  if (!factors_.empty() && constant_ == Rat(-1)) s = "-";
  for (const auto& f : factors_) {
    s += "(t";
    if (!f.root.is_zero()) s += (f.root.sign() > 0 ? "-" : "+") + (f.root.sign() > 0 ? f.root : -f.root).str();
    s += ")";
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

std::vector<Place> finite_support(const FactoredRational& f) {
  std::vector<Place> out;
  for (const auto& fac : f.factors()) out.push_back(Place::finite(fac.root));
  return out;
}

bool sums_to_one(const FactoredRational& f, const FactoredRational& g) {
  const auto a = f.to_dense();
  const auto b = g.to_dense();
  return (a.num * b.den + b.num * a.den - a.den * b.den).is_zero();
}

bool sums_to_zero(const FactoredRational& f, const FactoredRational& g) { return f == -g; }

}  // namespace milreg::exact
