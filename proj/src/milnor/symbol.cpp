#include "milreg/milnor/symbol.hpp"

#include "milreg/error.hpp"

namespace milreg::milnor {

std::string Field::str() const {
  switch (kind) {
    case Kind::Rational: return "Q";
    case Kind::FunctionField: return "Q(t)";
    case Kind::ModP: return "F_" + std::to_string(prime);
  }
  return "?";
}

SymbolEntry::SymbolEntry(Rat value) : value_(std::move(value)) {
  if (rat().is_zero()) throw DomainError(ErrorKind::NonInvertibleEntry, "symbol entry 0");
}

Field SymbolEntry::field() const {
  if (is_rat()) return Field::rational();
  if (is_fn()) return Field::function_field();
  return Field::mod_p(modp().p);
}

bool SymbolEntry::is_one() const {
  if (is_rat()) return rat().is_one();
  if (is_fn()) return fn().is_one();
  return modp().r == 1;
}

bool SymbolEntry::is_minus_one() const {
  if (is_rat()) return rat() == Rat(-1);
  if (is_fn()) return fn().is_constant() && fn().constant() == Rat(-1);
  return modp().r == modp().p - 1;
}

bool SymbolEntry::is_linear_atom() const {
  return is_fn() && fn().constant().is_one() && fn().factors().size() == 1 &&
         fn().factors().front().exponent == 1;
}

std::string SymbolEntry::str() const {
  if (is_rat()) return rat().str();
  if (is_fn()) return fn().str();
  return std::to_string(modp().r) + " mod " + std::to_string(modp().p);
}

SymbolEntry minus_one(const Field& field) {
  switch (field.kind) {
    case Field::Kind::Rational: return SymbolEntry(Rat(-1));
    case Field::Kind::FunctionField: return SymbolEntry(FactoredRational::constant_fn(Rat(-1)));
    case Field::Kind::ModP: return SymbolEntry(ModP{field.prime - 1, field.prime});
  }
  throw std::logic_error("unknown field kind");
}

int compare_entries(const SymbolEntry& a, const SymbolEntry& b) {
  auto kind_rank = [](const SymbolEntry& e) { return e.is_rat() ? 0 : (e.is_fn() ? 1 : 2); };
  if (kind_rank(a) != kind_rank(b)) return kind_rank(a) < kind_rank(b) ? -1 : 1;
  if (a.is_rat()) return exact::lex_compare(a.rat(), b.rat());
  if (a.is_modp()) {
    if (a.modp().p != b.modp().p) return a.modp().p < b.modp().p ? -1 : 1;
    if (a.modp().r != b.modp().r) return a.modp().r < b.modp().r ? -1 : 1;
    return 0;
  }
  const auto& f = a.fn();
  const auto& g = b.fn();
  if (int c = exact::lex_compare(f.constant(), g.constant()); c != 0) return c;
  const auto& ff = f.factors();
  const auto& gf = g.factors();
  for (std::size_t i = 0; i < ff.size() && i < gf.size(); ++i) {
    if (int c = exact::lex_compare(ff[i].root, gf[i].root); c != 0) return c;
    if (ff[i].exponent != gf[i].exponent) return ff[i].exponent < gf[i].exponent ? -1 : 1;
  }
  if (ff.size() != gf.size()) return ff.size() < gf.size() ? -1 : 1;
  return 0;
}

bool entries_sum_to_one(const SymbolEntry& a, const SymbolEntry& b) {
  if (a.field() != b.field()) throw DomainError(ErrorKind::MixedFields, "entries over different fields");
  if (a.is_rat()) return a.rat() + b.rat() == Rat(1);
  if (a.is_fn()) return exact::sums_to_one(a.fn(), b.fn());
  return (a.modp().r + b.modp().r) % a.modp().p == 1 % a.modp().p;
}

bool entries_sum_to_zero(const SymbolEntry& a, const SymbolEntry& b) {
  if (a.field() != b.field()) throw DomainError(ErrorKind::MixedFields, "entries over different fields");
  if (a.is_rat()) return (a.rat() + b.rat()).is_zero();
  if (a.is_fn()) return exact::sums_to_zero(a.fn(), b.fn());
  return (a.modp().r + b.modp().r) % a.modp().p == 0;
}

bool SymbolLess::operator()(const MilnorSymbol& a, const MilnorSymbol& b) const {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (int c = compare_entries(a[i], b[i]); c != 0) return c < 0;
  return a.size() < b.size();
}

std::string symbol_str(const MilnorSymbol& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].str();
  return out + "}";
}

}  // namespace milreg::milnor
