#include "milreg/regulator/forms.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace milreg::regulator {

int degree_of(unsigned mask) { return std::popcount(mask); }

int wedge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  // Each generator of a must pass every lower generator of b.
  int swaps = 0;
  for (unsigned bit = 0; bit < 4; ++bit)
    if (a & (1u << bit)) swaps += std::popcount(b & ((1u << bit) - 1u));
  return swaps % 2 == 0 ? 1 : -1;
}

Form Form::scalar(cplx c) { return monomial(0, c); }

Form Form::monomial(unsigned mask, cplx c) {
  Form f;
  f.c_[mask] = c;
  return f;
}

Form Form::one_form(int k, cplx a, cplx b) {
  Form f;
  f.c_[k == 1 ? dz1 : dz2] = a;
  f.c_[k == 1 ? dzb1 : dzb2] = b;
  return f;
}

Form Form::conj() const {
  // conj swaps dz_k <-> dzb_k; re-sorting costs one sign per swapped pair
  // present in the monomial.
  Form out;
  for (unsigned m = 0; m < 16; ++m) {
    if (c_[m] == cplx(0.0)) continue;
    unsigned img = 0;
    for (unsigned k = 0; k < 2; ++k) {
      const unsigned hol = 1u << (2 * k);
      const unsigned anti = hol << 1;
      if (m & hol) img |= anti;
      if (m & anti) img |= hol;
    }
    int sign = 1;
    for (unsigned k = 0; k < 2; ++k) {
      const unsigned pair = 3u << (2 * k);
      if ((m & pair) == pair) sign = -sign;
    }
    out.c_[img] += static_cast<double>(sign) * std::conj(c_[m]);
  }
  return out;
}

double Form::max_abs(int degree) const {
  double best = 0.0;
  for (unsigned m = 0; m < 16; ++m)
    if (degree < 0 || degree_of(m) == degree) best = std::max(best, std::abs(c_[m]));
  return best;
}

bool Form::is_homogeneous(int degree, double tol) const {
  for (unsigned m = 0; m < 16; ++m)
    if (degree_of(m) != degree && std::abs(c_[m]) > tol) return false;
  return true;
}

Form Form::restrict_away(int k) const {
  const unsigned pair = k == 1 ? (dz1 | dzb1) : (dz2 | dzb2);
  Form out;
  for (unsigned m = 0; m < 16; ++m)
    if (!(m & pair)) out.c_[m] = c_[m];
  return out;
}

std::string Form::str() const {
  static const char* names[4] = {"dz1", "dzb1", "dz2", "dzb2"};
  std::ostringstream os;
  bool first = true;
  for (unsigned m = 0; m < 16; ++m) {
    if (c_[m] == cplx(0.0)) continue;
    if (!first) os << " + ";
    os << "(" << c_[m].real() << (c_[m].imag() < 0 ? "-" : "+") << std::abs(c_[m].imag()) << "i)";
    for (unsigned b = 0; b < 4; ++b)
      if (m & (1u << b)) os << " " << names[b];
    first = false;
  }
  return first ? "0" : os.str();
}

Form& Form::operator+=(const Form& o) {
  for (unsigned m = 0; m < 16; ++m) c_[m] += o.c_[m];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (unsigned m = 0; m < 16; ++m) c_[m] -= o.c_[m];
  return *this;
}

Form& Form::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.c_[i] == cplx(0.0)) continue;
    for (unsigned j = 0; j < 16; ++j) {
      if (b.c_[j] == cplx(0.0)) continue;
      const int s = wedge_sign(i, j);
      if (s != 0) out.c_[i | j] += static_cast<double>(s) * a.c_[i] * b.c_[j];
    }
  }
  return out;
}

Form pi_p(const Form& w, int p) {
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  return 0.5 * (w + sign * w.conj());
}

cplx top_density(const Form& w, int complex_dim) {
  if (complex_dim == 1) return cplx(0.0, -2.0) * w[Form::dz1 | Form::dzb1];
  return -4.0 * w[Form::dz1 | Form::dzb1 | Form::dz2 | Form::dzb2];
}

}  // namespace milreg::regulator
