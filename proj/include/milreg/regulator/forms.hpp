#pragma once

#include <array>
#include <complex>
#include <string>

namespace milreg::regulator {

using cplx = std::complex<double>;

// Pointwise value of a complex differential form on C^d, d in {1, 2}.
// Generators in canonical order: dz1, dzb1, dz2, dzb2 (bits 0..3); the
// coefficient of a monomial is stored at its bitmask.
class Form {
 public:
  enum Gen : unsigned { dz1 = 1u, dzb1 = 2u, dz2 = 4u, dzb2 = 8u };

  Form() = default;
  static Form scalar(cplx c);
  static Form monomial(unsigned mask, cplx c);
  // a dz + b dzb on factor k (1 or 2).
  static Form one_form(int k, cplx a, cplx b);

  cplx operator[](unsigned mask) const { return c_[mask]; }
  cplx& operator[](unsigned mask) { return c_[mask]; }

  Form conj() const;
  // Largest |coefficient| over monomials of the given degree (-1: all).
  double max_abs(int degree = -1) const;
  bool is_homogeneous(int degree, double tol = 0.0) const;
  // Drops monomials containing dz_k or dzb_k (pullback to {z_k = const}).
  Form restrict_away(int k) const;
  std::string str() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(cplx s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(cplx s, Form a) { return a *= s; }
  friend Form operator*(Form a, cplx s) { return a *= s; }
  friend Form wedge(const Form& a, const Form& b);

 private:
  std::array<cplx, 16> c_{};
};

int degree_of(unsigned mask);
// Sign of the shuffle a ^ b -> canonical order; 0 when they share a generator.
int wedge_sign(unsigned a, unsigned b);

// pi_p(w) = (w + (-1)^p conj(w)) / 2.
Form pi_p(const Form& w, int p);

// Lebesgue density of a top-degree form on C^d: dz ^ dzb = -2i dx ^ dy per factor.
cplx top_density(const Form& w, int complex_dim);

}  // namespace milreg::regulator
