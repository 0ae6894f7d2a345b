#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "milreg/exact/factored.hpp"
#include "milreg/milnor/element.hpp"
#include "milreg/milnor/kappa.hpp"

namespace milreg::tame {

using exact::FactoredRational;
using exact::Place;
using exact::Rat;
using milnor::KappaPiElement;
using milnor::MilnorElement;
using milnor::MilnorSymbol;

// pi = unit * (t - a) at a finite place, pi = unit / t at infinity.
struct UniformizerChoice {
  Place place = Place::infinity();
  FactoredRational unit;

  static UniformizerChoice canonical(const Place& p) { return {p, FactoredRational()}; }
  // Throws DomainError(InvalidUniformizer) unless unit has valuation 0 at p.
  static UniformizerChoice make(const Place& p, const FactoredRational& unit);
};

// l(u bar) + i Pi for f = u pi^i.
KappaPiElement d_pi(const FactoredRational& f, const UniformizerChoice& u);

// Product of d_pi over the entries, summed over terms. x must live over Q(t).
KappaPiElement boundary_pi(const MilnorElement& x, const UniformizerChoice& u);
// Same expansion applied to the entries as written, without normalizing first.
KappaPiElement boundary_pi(const MilnorSymbol& raw, const UniformizerChoice& u);

MilnorElement del0(const MilnorElement& x, const UniformizerChoice& u);
MilnorElement del_nu(const MilnorElement& x, const UniformizerChoice& u);
MilnorElement del0(const MilnorSymbol& raw, const UniformizerChoice& u);
MilnorElement del_nu(const MilnorSymbol& raw, const UniformizerChoice& u);

// sum_j k_j (-1)^{m-j} l(a_1)..^j..l(a_m) + (prod k_j) l(-1)^{m-1}; the
// last term only for m >= 2. For m = 1 the result is k in K_0.
MilnorElement residue_closed_form(const MilnorSymbol& raw, const UniformizerChoice& u);

// (-1)^{v(f)v(g)} * (f^{v(g)} / g^{v(f)})(place), the classical tame symbol.
Rat classical_tame_symbol(const FactoredRational& f, const FactoredRational& g, const Place& p);

struct GerstenChain {
  int degree = 0;  // degree of the residue-field elements
  std::map<Place, MilnorElement> support;

  std::string str() const;
  friend bool operator==(const GerstenChain&, const GerstenChain&) = default;
};

GerstenChain gersten_boundary(const MilnorElement& x);
GerstenChain chain_add(const GerstenChain& a, const GerstenChain& b);

// Product over all places of del_nu({f, g}) read back in Q^x.
Rat weil_reciprocity_defect(const FactoredRational& f, const FactoredRational& g);

// d_pi for the p-adic valuation on Q, landing in A(Pi) over F_p.
KappaPiElement d_pi_padic(const Rat& x, std::uint64_t p);
KappaPiElement boundary_padic(const MilnorElement& x, std::uint64_t p);
MilnorElement padic_tame(const MilnorElement& x, std::uint64_t p);

// Exact vanishing test in K^M_n(Q): faithful for n <= 1; for n = 2 the real
// symbol together with the tame symbols at odd primes; for n >= 3 the sign
// map to Z/2.
bool vanishes_over_q(const MilnorElement& x);

}  // namespace milreg::tame
