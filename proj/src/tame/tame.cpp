#include "milreg/tame/tame.hpp"

#include <set>

#include "milreg/error.hpp"
#include "milreg/exact/padic.hpp"

namespace milreg::tame {

using milnor::Field;
using milnor::SymbolEntry;

UniformizerChoice UniformizerChoice::make(const Place& p, const FactoredRational& unit) {
  if (unit.valuation(p) != 0)
    throw DomainError(ErrorKind::InvalidUniformizer,
                      "unit multiplier " + unit.str() + " has nonzero valuation at " + p.str());
  return {p, unit};
}

KappaPiElement d_pi(const FactoredRational& f, const UniformizerChoice& u) {
  const long i = f.valuation(u.place);
  const Rat ubar = f.residue_value(u.place) / u.unit.residue_value(u.place).pow(i);
  return {MilnorElement::ell(SymbolEntry(ubar)), MilnorElement::integer(Field::rational(), i)};
}

namespace {

template <class Entries, class DPi>
KappaPiElement expand_product(const Entries& entries, std::int64_t coef, const Field& residue_field, DPi dpi) {
  KappaPiElement acc = KappaPiElement::from_plain(MilnorElement::integer(residue_field, coef));
  for (const auto& e : entries) acc = milnor::kappa_pi_mul(acc, dpi(e));
  return acc;
}

void require_function_field(const MilnorElement& x) {
  if (x.field() != Field::function_field())
    throw DomainError(ErrorKind::MixedFields,
                      "boundary maps on Q(t) need an element over Q(t), got " + x.field().str());
}

}  // namespace

KappaPiElement boundary_pi(const MilnorElement& x, const UniformizerChoice& u) {
  require_function_field(x);
  KappaPiElement acc = KappaPiElement::zero(Field::rational(), x.degree());
  for (const auto& [s, c] : x.terms())
    acc = milnor::kappa_pi_add(
        acc, expand_product(s, c, Field::rational(), [&](const SymbolEntry& e) { return d_pi(e.fn(), u); }));
  return acc;
}

KappaPiElement boundary_pi(const MilnorSymbol& raw, const UniformizerChoice& u) {
  for (const auto& e : raw)
    if (!e.is_fn()) throw DomainError(ErrorKind::MixedFields, "entry " + e.str() + " is not over Q(t)");
  return expand_product(raw, 1, Field::rational(), [&](const SymbolEntry& e) { return d_pi(e.fn(), u); });
}

MilnorElement del0(const MilnorElement& x, const UniformizerChoice& u) { return boundary_pi(x, u).plain(); }
MilnorElement del_nu(const MilnorElement& x, const UniformizerChoice& u) { return boundary_pi(x, u).pi_part(); }

MilnorElement del0(const MilnorSymbol& raw, const UniformizerChoice& u) { return boundary_pi(raw, u).plain(); }
MilnorElement del_nu(const MilnorSymbol& raw, const UniformizerChoice& u) { return boundary_pi(raw, u).pi_part(); }

MilnorElement residue_closed_form(const MilnorSymbol& raw, const UniformizerChoice& u) {
  const auto m = raw.size();
  std::vector<long> k(m);
  std::vector<MilnorElement> ell;
  for (std::size_t j = 0; j < m; ++j) {
    if (!raw[j].is_fn()) throw DomainError(ErrorKind::MixedFields, "entry " + raw[j].str() + " is not over Q(t)");
    k[j] = raw[j].fn().valuation(u.place);
    ell.push_back(d_pi(raw[j].fn(), u).plain());
  }
  const Field q = Field::rational();
  MilnorElement acc = MilnorElement::zero(q, static_cast<int>(m) - 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (k[j] == 0) continue;
    MilnorElement term = MilnorElement::integer(q, ((m - 1 - j) % 2 == 0 ? 1 : -1) * k[j]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) term = milnor::k_mul(term, ell[i]);
    acc = milnor::k_add(acc, term);
  }
  if (m >= 2) {
    std::int64_t prod = 1;
    for (long kj : k) prod *= kj;
    MilnorElement last = MilnorElement::integer(q, prod);
    const auto eps = MilnorElement::ell(milnor::minus_one(q));
    for (std::size_t i = 0; i + 1 < m; ++i) last = milnor::k_mul(last, eps);
    acc = milnor::k_add(acc, last);
  }
  return acc;
}

Rat classical_tame_symbol(const FactoredRational& f, const FactoredRational& g, const Place& p) {
  const long a = f.valuation(p);
  const long b = g.valuation(p);
  const Rat v = (f.pow(b) * g.pow(-a)).residue_value(p);
  return ((a * b) % 2 == 0) ? v : -v;
}

std::string GerstenChain::str() const {
  if (support.empty()) return "0";
  std::string s;
  for (const auto& [p, e] : support) {
    if (!s.empty()) s += ", ";
    s += p.str() + " -> " + e.str();
  }
  return "{" + s + "}";
}

GerstenChain gersten_boundary(const MilnorElement& x) {
  require_function_field(x);
  std::set<Place> places{Place::infinity()};
  for (const auto& [s, c] : x.terms())
    for (const auto& e : s)
      for (const auto& p : exact::finite_support(e.fn())) places.insert(p);
  GerstenChain chain;
  chain.degree = x.degree() - 1;
  for (const auto& p : places) {
    auto v = del_nu(x, UniformizerChoice::canonical(p));
    if (!v.empty()) chain.support.emplace(p, std::move(v));
  }
  return chain;
}

GerstenChain chain_add(const GerstenChain& a, const GerstenChain& b) {
  if (a.degree != b.degree) throw DomainError(ErrorKind::DegreeMismatch, "chains of different degree");
  GerstenChain out = a;
  for (const auto& [p, e] : b.support) {
    auto it = out.support.find(p);
    if (it == out.support.end()) {
      out.support.emplace(p, e);
      continue;
    }
    it->second = milnor::k_add(it->second, e);
    if (it->second.empty()) out.support.erase(it);
  }
  return out;
}

Rat weil_reciprocity_defect(const FactoredRational& f, const FactoredRational& g) {
  const auto x = milnor::symbol({SymbolEntry(f), SymbolEntry(g)});
  std::set<Place> places{Place::infinity()};
  for (const auto& p : exact::finite_support(f)) places.insert(p);
  for (const auto& p : exact::finite_support(g)) places.insert(p);
  Rat acc(1);
  for (const auto& p : places) acc *= milnor::k1_to_rat(del_nu(x, UniformizerChoice::canonical(p)));
  return acc;
}

KappaPiElement d_pi_padic(const Rat& x, std::uint64_t p) {
  const long v = exact::padic_valuation(x, p);
  const Field fp = Field::mod_p(p);
  return {MilnorElement::ell(SymbolEntry(exact::padic_residue(x, p))), MilnorElement::integer(fp, v)};
}

KappaPiElement boundary_padic(const MilnorElement& x, std::uint64_t p) {
  if (x.field() != Field::rational())
    throw DomainError(ErrorKind::MixedFields, "p-adic boundary needs an element over Q, got " + x.field().str());
  if (!exact::is_prime(p)) throw DomainError(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  const Field fp = Field::mod_p(p);
  KappaPiElement acc = KappaPiElement::zero(fp, x.degree());
  for (const auto& [s, c] : x.terms())
    acc = milnor::kappa_pi_add(
        acc, expand_product(s, c, fp, [&](const SymbolEntry& e) { return d_pi_padic(e.rat(), p); }));
  return acc;
}

MilnorElement padic_tame(const MilnorElement& x, std::uint64_t p) { return boundary_padic(x, p).pi_part(); }

bool vanishes_over_q(const MilnorElement& x) {
  if (x.field() != Field::rational())
    throw DomainError(ErrorKind::MixedFields, "expected an element over Q, got " + x.field().str());
  if (x.degree() <= 1) return x.empty();
  // Parity of the coefficient on {-1, ..., -1}; every other atomic symbol has
  // a positive entry and dies under the sign map.
  std::int64_t real = 0;
  std::set<std::uint64_t> primes;
  for (const auto& [s, c] : x.terms()) {
    bool all_negative = true;
    for (const auto& e : s) {
      if (!e.is_minus_one()) all_negative = false;
      if (e.rat().is_integer() && e.rat().sign() > 0) primes.insert(e.rat().num().get_ui());
    }
    if (all_negative) real += c;
  }
  if (real % 2 != 0) return false;
  if (x.degree() >= 3) return true;
  for (auto p : primes)
    if (p != 2 && !padic_tame(x, p).empty()) return false;
  return true;
}

}  // namespace milreg::tame
