#pragma once

// Random inputs and independent oracles shared by the unit tests and the
// acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "milreg/exact/factored.hpp"
#include "milreg/milnor/element.hpp"
#include "milreg/tame/tame.hpp"

namespace support {

using milreg::exact::Factor;
using milreg::exact::FactoredRational;
using milreg::exact::Place;
using milreg::exact::Poly;
using milreg::exact::Rat;
using milreg::milnor::MilnorSymbol;
using milreg::milnor::SymbolEntry;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool coin() { return integer(0, 1) == 1; }
};

// Nonzero rational with small numerator and denominator.
inline Rat small_rat(Rng& r, long bound = 12) {
  long n = 0;
  while (n == 0) n = r.integer(-bound, bound);
  return Rat(n, r.integer(1, 4));
}

// c * prod (t - a)^e with roots in [-5, 5] and exponents in [-3, 3].
inline FactoredRational small_fn(Rng& r, int max_factors = 3) {
  std::vector<Factor> fs;
  const int n = static_cast<int>(r.integer(0, max_factors));
  for (int i = 0; i < n; ++i) fs.push_back({Rat(r.integer(-5, 5)), r.integer(-3, 3)});
  long c = 0;
  while (c == 0) c = r.integer(-6, 6);
  return FactoredRational::make(Rat(c, r.integer(1, 3)), fs);
}

inline SymbolEntry q_entry(Rng& r) { return SymbolEntry(small_rat(r)); }
inline SymbolEntry fn_entry(Rng& r) { return SymbolEntry(small_fn(r)); }

// A unit at p: balanced exponents keep the valuation at infinity zero too.
inline FactoredRational random_unit(Rng& r, const Place& p) {
  std::vector<Factor> fs;
  const long e = r.integer(-2, 2);
  for (int i = 0; i < 2; ++i) {
    Rat root(r.integer(-5, 5));
    if (!p.is_infinity() && root == p.root()) root = root + Rat(11);
    fs.push_back({root, i == 0 ? e : -e});
  }
  long c = 0;
  while (c == 0) c = r.integer(-5, 5);
  return FactoredRational::make(Rat(c), fs);
}

inline std::vector<Place> places_of(const std::vector<FactoredRational>& fs) {
  std::vector<Place> out{Place::infinity()};
  for (const auto& f : fs)
    for (const auto& p : milreg::exact::finite_support(f)) out.push_back(p);
  return out;
}

// --- dense oracle --------------------------------------------------------

inline Poly poly_pow(const Poly& p, long e) {
  Poly acc = Poly::constant(Rat(1));
  for (long i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Divides by (t - a) as long as a is a root; returns the multiplicity.
inline long strip_root(Poly& p, const Rat& a) {
  long k = 0;
  for (;;) {
    if (p(a) != Rat(0)) return k;
    // synthetic division
    const auto& c = p.coeffs();
    std::vector<Rat> q(c.size() - 1);
    Rat carry(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry = c[i] + carry * a;
      q[i - 1] = carry;
    }
    p = Poly(q);
    ++k;
  }
}

// num/den as dense polynomials, rebuilt from the factored data.
inline std::pair<Poly, Poly> dense(const FactoredRational& f) {
  Poly num = Poly::constant(f.constant()), den = Poly::constant(Rat(1));
  for (const auto& x : f.factors()) {
    if (x.exponent > 0) num = num * poly_pow(Poly::linear_monic(x.root), x.exponent);
    else den = den * poly_pow(Poly::linear_monic(x.root), -x.exponent);
  }
  return {num, den};
}

// Valuation and leading unit value at p, computed from dense polynomials.
inline std::pair<long, Rat> dense_valuation(const FactoredRational& f, const Place& p) {
  auto [num, den] = dense(f);
  if (p.is_infinity()) {
    const long v = den.degree() - num.degree();
    return {v, num.coeffs().back() / den.coeffs().back()};
  }
  const long a = strip_root(num, p.root());
  const long b = strip_root(den, p.root());
  return {a - b, num(p.root()) / den(p.root())};
}

// (-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)} at p, via dense evaluation.
inline Rat tame_oracle(const FactoredRational& f, const FactoredRational& g, const Place& p) {
  const auto [vf, uf] = dense_valuation(f, p);
  const auto [vg, ug] = dense_valuation(g, p);
  // The uniformizer parts cancel: f^{vg}/g^{vf} = uf^{vg}/ug^{vf} * pi^0.
  // At infinity pi = 1/t, so the unit of t^{-v} is read off the leading
  // coefficients as above with no extra sign.
  Rat v = uf.pow(vg) / ug.pow(vf);
  if ((vf * vg) % 2 != 0) v = -v;
  return v;
}

// --- rewriting laws --------------------------------------------------------

using milreg::milnor::Field;
using milreg::milnor::FormalSum;
using milreg::milnor::MilnorElement;

enum class Law { Multilinear, Swap, Steinberg, R3, EntryOne, TwoTorsion, Idempotent };
inline constexpr Law kLaws[] = {Law::Multilinear, Law::Swap,       Law::Steinberg, Law::R3,
                                Law::EntryOne,    Law::TwoTorsion, Law::Idempotent};

inline const char* law_name(Law l) {
  switch (l) {
    case Law::Multilinear: return "multilinearity";
    case Law::Swap: return "adjacent-swap sign";
    case Law::Steinberg: return "Steinberg kill";
    case Law::R3: return "R3 {a,-a}";
    case Law::EntryOne: return "entry-1 kill";
    case Law::TwoTorsion: return "2-torsion of -1 terms";
    case Law::Idempotent: return "idempotent normalize";
  }
  return "?";
}

inline bool pair_sums_to_0_or_1(const MilnorSymbol& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (milreg::milnor::entries_sum_to_one(s[i], s[j]) || milreg::milnor::entries_sum_to_zero(s[i], s[j]))
        return true;
  return false;
}

inline MilnorSymbol random_symbol(Rng& r, bool over_qt, int m) {
  MilnorSymbol s;
  for (int i = 0; i < m; ++i) s.push_back(over_qt ? fn_entry(r) : q_entry(r));
  return s;
}

inline bool is_zero_element(const MilnorElement& x) { return x.empty(); }

// Equality in K-theory: identical normal forms, or over Q a difference that
// the exact K^M_n(Q) test sends to zero.
inline bool k_equal(const MilnorElement& a, const MilnorElement& b) {
  if (a == b) return true;
  if (a.field().kind != Field::Kind::Rational) return false;
  return milreg::tame::vanishes_over_q(milreg::milnor::k_sub(a, b));
}

struct LawResult {
  bool ok = false;
  std::string detail;
};

// One randomized instance of law l. Q and Q(t) alternate by coin flip.
inline LawResult check_law(Law l, Rng& r) {
  using milreg::milnor::k_add;
  using milreg::milnor::normalize;
  using milreg::milnor::symbol;
  using milreg::milnor::symbol_str;
  const bool qt = r.coin();
  const Field field = qt ? Field::function_field() : Field::rational();
  const int m = static_cast<int>(r.integer(2, 4));
  MilnorSymbol s = random_symbol(r, qt, m);
  const std::size_t i = static_cast<std::size_t>(r.integer(0, m - 1));
  switch (l) {
    case Law::Multilinear: {
      // {.., a a', ..} = {.., a, ..} + {.., a', ..}. Over Q(t) the premise
      // excludes supplied pairs summing to 0 or 1 (the raw kill is not
      // multilinear on the nose).
      SymbolEntry a2 = qt ? fn_entry(r) : q_entry(r);
      MilnorSymbol prod = s, s2 = s;
      s2[i] = a2;
      prod[i] = qt ? SymbolEntry(s[i].fn() * a2.fn()) : SymbolEntry(s[i].rat() * a2.rat());
      if (qt && (pair_sums_to_0_or_1(s) || pair_sums_to_0_or_1(s2) || pair_sums_to_0_or_1(prod)))
        return check_law(l, r);
      const auto lhs = normalize({{1, prod}}, field, m);
      const auto rhs = normalize({{1, s}, {1, s2}}, field, m);
      return {k_equal(lhs, rhs), symbol_str(prod) + " vs " + symbol_str(s) + " + " + symbol_str(s2)};
    }
    case Law::Swap: {
      MilnorSymbol t = s;
      const std::size_t j = i + 1 < s.size() ? i + 1 : i - 1;
      std::swap(t[i], t[j]);
      return {is_zero_element(normalize({{1, s}, {1, t}}, field, m)), symbol_str(s) + " + " + symbol_str(t)};
    }
    case Law::Steinberg: {
      const std::size_t j = (i + 1 + static_cast<std::size_t>(r.integer(0, m - 2))) % s.size();
      if (qt) {
        // 1 - f with f = s[i]: build it densely only for the simple case f = c (t - a).
        const Rat a(r.integer(-5, 5));
        const Rat c = small_rat(r, 6);
        s[i] = SymbolEntry(FactoredRational::make(c, {{a, 1}}));
        // 1 - c (t - a) = -c (t - (a + 1/c))
        s[j] = SymbolEntry(FactoredRational::make(-c, {{a + c.inverse(), 1}}));
      } else {
        Rat a = small_rat(r);
        while (a == Rat(1)) a = small_rat(r);
        s[i] = SymbolEntry(a);
        s[j] = SymbolEntry(Rat(1) - a);
      }
      return {is_zero_element(symbol(s)), symbol_str(s)};
    }
    case Law::R3: {
      const std::size_t j = (i + 1 + static_cast<std::size_t>(r.integer(0, m - 2))) % s.size();
      s[j] = qt ? SymbolEntry(-s[i].fn()) : SymbolEntry(-s[i].rat());
      if (s[i].is_one() || s[i].is_minus_one() || s[j].is_one()) return check_law(l, r);
      return {is_zero_element(symbol(s)), symbol_str(s)};
    }
    case Law::EntryOne: {
      s[i] = qt ? SymbolEntry(FactoredRational()) : SymbolEntry(Rat(1));
      return {is_zero_element(symbol(s)), symbol_str(s)};
    }
    case Law::TwoTorsion: {
      s[i] = milreg::milnor::minus_one(field);
      return {is_zero_element(normalize({{2, s}}, field, m)), "2" + symbol_str(s)};
    }
    case Law::Idempotent: {
      FormalSum raw{{r.integer(-3, 3), s}, {r.integer(-3, 3), random_symbol(r, qt, m)}};
      const auto x = normalize(raw, field, m);
      return {normalize(x.to_formal(), field, m) == x, x.str()};
    }
  }
  return {false, "unknown law"};
}

}  // namespace support
