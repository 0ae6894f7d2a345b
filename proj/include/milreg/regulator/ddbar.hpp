#pragma once

#include <vector>

#include "milreg/regulator/forms.hpp"
#include "milreg/torus/quadrature.hpp"
#include "milreg/torus/torus.hpp"

namespace milreg::regulator {

using torus::EllipticFunction;
using torus::QuadratureGrid;
using torus::Torus;

// c * exp(2 pi i (a s + b t)) at z = s + t tau.
struct TrigMode {
  int a = 0;
  int b = 0;
  cplx c;
};

// Doubly periodic trigonometric polynomial and its z / zb derivatives.
struct TrigPoly {
  std::vector<TrigMode> modes;

  struct Jet {
    cplx v, z, zb, zzb;
  };
  Jet jet(const Torus& T, cplx z) const;
  bool empty() const { return modes.empty(); }
};

// eta = sum_k A_k(z1) B_k(z2) dz_{slot_k}, a smooth (1,0)-form on E1 x E2.
struct SplitEta {
  struct Term {
    int slot = 1;  // 1: dz1, 2: dz2
    TrigPoly A;
    TrigPoly B;
  };
  std::vector<Term> terms;

  // Throws DomainError(DegreeMismatch) for a slot outside {1, 2}.
  void validate() const;
};

struct DdbarResult {
  // int [log|f| dlog|g| - log|g| dlog|f|] ^ (ddbar-side 3-form).
  double lhs = 0.0, lhs_error = 0.0;
  // Residue side with dlog|f_other| on each divisor component.
  double rhs = 0.0, rhs_error = 0.0;
  // Diagnostics: the same residue sum with d arg in place of dlog|.|, and
  // int 2 dlog|f| ^ dlog|g| ^ (d eta' + conj), which equals lhs by Stokes.
  double rhs_darg = 0.0, rhs_darg_error = 0.0;
  double lhs_stokes = 0.0, lhs_stokes_error = 0.0;
  double imag_residual = 0.0;
};

// Pointwise pieces, exposed for tests. z1 on f.torus(), z2 on g.torus().
Form eta_form(const SplitEta& eta, const Torus& T1, const Torus& T2, cplx z1, cplx z2);
// dbar d eta + d dbar conj(eta).
Form ddbar_form(const SplitEta& eta, const Torus& T1, const Torus& T2, cplx z1, cplx z2);

DdbarResult ddbar_defect(const EllipticFunction& f, const EllipticFunction& g, const SplitEta& eta,
                         const QuadratureGrid& G);

}  // namespace milreg::regulator
