#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "milreg/milnor/symbol.hpp"

namespace milreg::milnor {

// An unreduced integer combination of symbols.
using FormalSum = std::vector<std::pair<std::int64_t, MilnorSymbol>>;

// Element of K^M_n(F) held in rewriting normal form.
//
// Normal form for Q and Q(t): every entry is an atom (-1, a prime, or for
// Q(t) a monic linear factor t - a or a prime/-1 constant), entries sorted by
// compare_entries, no repeated atom other than -1, no pair of atoms summing
// to 0 or 1, at most one linear atom per symbol, and coefficients of symbols
// containing -1 reduced mod 2. Over F_p the degree-one part is a single
// entry and degrees >= 2 vanish.
class MilnorElement {
 public:
  using Terms = std::map<MilnorSymbol, std::int64_t, SymbolLess>;

  static MilnorElement zero(const Field& field, int degree);
  // n in K_0 = Z.
  static MilnorElement integer(const Field& field, std::int64_t n);
  // l(a) in K_1.
  static MilnorElement ell(const SymbolEntry& a);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  FormalSum to_formal() const;
  std::string str() const;

  friend bool operator==(const MilnorElement&, const MilnorElement&) = default;

 private:
  friend MilnorElement normalize(const FormalSum&, const Field&, int);
  MilnorElement(Field f, int d) : field_(f), degree_(d) {}
  Field field_;
  int degree_ = 0;
  Terms terms_;
};

// Rewrites a formal sum into normal form. Every symbol must have length
// `degree` and entries over `field`.
// Throws DomainError(MixedFields | DegreeMismatch | NonInvertibleEntry).
MilnorElement normalize(const FormalSum& raw, const Field& field, int degree);
// Convenience: field and degree read from the first symbol (raw nonempty).
MilnorElement normalize(const FormalSum& raw);
MilnorElement symbol(const MilnorSymbol& entries, std::int64_t coef = 1);

MilnorElement k_add(const MilnorElement& x, const MilnorElement& y);
MilnorElement k_scale(std::int64_t n, const MilnorElement& x);
MilnorElement k_sub(const MilnorElement& x, const MilnorElement& y);
MilnorElement k_mul(const MilnorElement& x, const MilnorElement& y);

enum class ZeroStatus { Zero, UnknownNonzero };
ZeroStatus is_zero(const MilnorElement& x);

// K_1(Q) = Q^x: l(a) read back as a. Throws DegreeMismatch / MixedFields.
Rat k1_to_rat(const MilnorElement& x);
ModP k1_to_modp(const MilnorElement& x);

}  // namespace milreg::milnor
