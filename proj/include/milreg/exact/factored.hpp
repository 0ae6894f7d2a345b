#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milreg/exact/rat.hpp"

namespace milreg::exact {

// A place of Q(t): a finite rational point or the point at infinity.
class Place {
 public:
  static Place finite(Rat root) { return Place(std::move(root)); }
  static Place infinity() { return Place(); }

  bool is_infinity() const { return !root_.has_value(); }
  const Rat& root() const;  // precondition: !is_infinity()
  std::string str() const { return is_infinity() ? "inf" : root_->str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.root_ == b.root_; }
  // Finite places by root, infinity last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  explicit Place(Rat root) : root_(std::move(root)) {}
  std::optional<Rat> root_;
};

struct Factor {
  Rat root;
  long exponent = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Dense polynomial over Q, coefficients in increasing degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly linear_monic(const Rat& root) { return Poly({-root, Rat(1)}); }  // t - root

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat operator()(const Rat& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// numerator / denominator, both dense.
struct DenseRational {
  Poly num;
  Poly den;
};

// Nonzero element of Q(t) written c * prod (t - r_i)^{e_i} with pairwise distinct
// rational roots sorted increasingly and no zero exponents.
class FactoredRational {
 public:
  // The constant function 1.
  FactoredRational() : constant_(1) {}

  // Merges duplicate roots, drops zero exponents and sorts. Throws
  // DomainError(ZeroConstant) when constant is zero.
  static FactoredRational make(const Rat& constant, std::vector<Factor> factors);
  static FactoredRational constant_fn(const Rat& c) { return make(c, {}); }
  static FactoredRational t() { return make(Rat(1), {{Rat(0), 1}}); }
  static FactoredRational linear(const Rat& root) { return make(Rat(1), {{root, 1}}); }  // t - root

  const Rat& constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  bool is_one() const { return factors_.empty() && constant_.is_one(); }
  long degree() const;  // sum of exponents

  FactoredRational inverse() const;
  FactoredRational pow(long exponent) const;
  FactoredRational operator-() const;

  long valuation(const Place& p) const;
  Rat residue_value(const Place& p) const;
  Rat evaluate(const Rat& x) const;

  DenseRational to_dense() const;
  std::string str() const;

  friend FactoredRational operator*(const FactoredRational& f, const FactoredRational& g);
  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  FactoredRational(Rat c, std::vector<Factor> f) : constant_(std::move(c)), factors_(std::move(f)) {}
  Rat constant_;
  std::vector<Factor> factors_;
};

FactoredRational fr_multiply(const FactoredRational& f, const FactoredRational& g);

// All places where f has a zero or pole (finite ones only).
std::vector<Place> finite_support(const FactoredRational& f);

// Exact tests via dense expansion.
bool sums_to_one(const FactoredRational& f, const FactoredRational& g);
bool sums_to_zero(const FactoredRational& f, const FactoredRational& g);

}  // namespace milreg::exact
