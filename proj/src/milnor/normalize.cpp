#include <deque>
#include <sstream>

#include "milreg/error.hpp"
#include "milreg/milnor/element.hpp"

namespace milreg::milnor {

namespace {

using Atoms = std::vector<std::pair<SymbolEntry, std::int64_t>>;

Atoms rat_atoms(const Rat& a, bool as_fn) {
  auto wrap = [as_fn](const Rat& r) {
    return as_fn ? SymbolEntry(FactoredRational::constant_fn(r)) : SymbolEntry(r);
  };
  Atoms out;
  if (a.sign() < 0) out.emplace_back(wrap(Rat(-1)), 1);
  for (auto& [p, e] : exact::factor_integer(a.num())) out.emplace_back(wrap(Rat(p, 1)), e);
  for (auto& [p, e] : exact::factor_integer(a.den())) out.emplace_back(wrap(Rat(p, 1)), -e);
  return out;
}

// Multiplicative decomposition of one entry into atoms (R1).
Atoms atoms_of(const SymbolEntry& e) {
  if (e.is_rat()) return rat_atoms(e.rat(), false);
  const auto& f = e.fn();
  Atoms out = rat_atoms(f.constant(), true);
  for (const auto& fac : f.factors())
    out.emplace_back(SymbolEntry(FactoredRational::linear(fac.root)), fac.exponent);
  return out;
}

class Normalizer {
 public:
  explicit Normalizer(const Field& field) : field_(field) {}

  void push_raw(std::int64_t coef, const MilnorSymbol& s) {
    if (coef == 0) return;
    // R2 / R3 on the entries as given: any pair (a, 1-a) or (a, -a).
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].is_one()) return;
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (entries_sum_to_one(s[i], s[j]) || entries_sum_to_zero(s[i], s[j])) return;
    }
    work_.emplace_back(coef, s);
  }

  MilnorElement::Terms run() {
    while (!work_.empty()) {
      auto [coef, s] = std::move(work_.front());
      work_.pop_front();
      expand(coef, s);
    }
    MilnorElement::Terms out;
    for (auto& [sym, c] : acc_) {
      std::int64_t v = c;
      if (contains_minus_one(sym)) v = ((v % 2) + 2) % 2;
      if (v != 0) out.emplace(sym, v);
    }
    return out;
  }

 private:
  static bool contains_minus_one(const MilnorSymbol& s) {
    for (const auto& e : s)
      if (e.is_minus_one()) return true;
    return false;
  }

  void expand(std::int64_t coef, const MilnorSymbol& s) {
    std::vector<Atoms> per_slot;
    per_slot.reserve(s.size());
    for (const auto& e : s) {
      per_slot.push_back(atoms_of(e));
      if (per_slot.back().empty()) return;  // entry 1
    }
    MilnorSymbol cur(s.size(), SymbolEntry(Rat(1)));
    std::vector<std::size_t> idx(s.size(), 0);
    while (true) {
      std::int64_t c = coef;
      for (std::size_t i = 0; i < s.size(); ++i) {
        cur[i] = per_slot[i][idx[i]].first;
        c *= per_slot[i][idx[i]].second;
      }
      reduce_atomic(c, cur);
      std::size_t k = 0;
      while (k < s.size() && ++idx[k] == per_slot[k].size()) idx[k++] = 0;
      if (k == s.size()) break;
    }
  }

  // Sort with R4 signs; rewrite {a,a} -> {-1,a} until stable.
  static std::int64_t sort_and_square(MilnorSymbol& s) {
    std::int64_t sign = 1;
    while (true) {
      for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && compare_entries(s[j - 1], s[j]) > 0; --j) {
          std::swap(s[j - 1], s[j]);
          sign = -sign;
        }
      bool changed = false;
      for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1] && !s[i].is_minus_one()) {
          s[i] = minus_one(s[i].field());
          changed = true;
          break;
        }
      if (!changed) return sign;
    }
  }

  void reduce_atomic(std::int64_t coef, MilnorSymbol s) {
    if (coef == 0) return;
    coef *= sort_and_square(s);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (entries_sum_to_one(s[i], s[j]) || entries_sum_to_zero(s[i], s[j])) return;
    // Two linear atoms: with x = (t-a)/(b-a), {x, 1-x} = 0 gives
    // {t-a, t-b} = {t-a, a-b} + {b-a, t-b}.
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].is_linear_atom() && s[i + 1].is_linear_atom()) {
        const Rat a = s[i].fn().factors().front().root;
        const Rat b = s[i + 1].fn().factors().front().root;
        MilnorSymbol left = s;
        left[i + 1] = SymbolEntry(FactoredRational::constant_fn(a - b));
        MilnorSymbol right = s;
        right[i] = SymbolEntry(FactoredRational::constant_fn(b - a));
        work_.emplace_back(coef, std::move(left));
        work_.emplace_back(coef, std::move(right));
        return;
      }
    }
    acc_[s] += coef;
  }

  Field field_;
  std::deque<std::pair<std::int64_t, MilnorSymbol>> work_;
  std::map<MilnorSymbol, std::int64_t, SymbolLess> acc_;
};

void check_symbol(const MilnorSymbol& s, const Field& field, int degree) {
  if (static_cast<int>(s.size()) != degree)
    throw DomainError(ErrorKind::DegreeMismatch, "symbol " + symbol_str(s) + " has degree " +
                                                     std::to_string(s.size()) + ", expected " +
                                                     std::to_string(degree));
  for (const auto& e : s)
    if (e.field() != field)
      throw DomainError(ErrorKind::MixedFields,
                        "entry " + e.str() + " is over " + e.field().str() + ", expected " + field.str());
}

}  // namespace

MilnorElement normalize(const FormalSum& raw, const Field& field, int degree) {
  for (const auto& [c, s] : raw) check_symbol(s, field, degree);
  MilnorElement out(field, degree);
  if (degree < 0) return out;
  if (field.kind == Field::Kind::ModP) {
    // K_n(F_p) = 0 for n >= 2; K_1(F_p) = F_p^x is stored as one entry.
    if (degree >= 2) return out;
    if (degree == 0) {
      std::int64_t n = 0;
      for (const auto& [c, s] : raw) n += c;
      if (n != 0) out.terms_.emplace(MilnorSymbol{}, n);
      return out;
    }
    ModP prod{1, field.prime};
    for (const auto& [c, s] : raw) prod = prod * s.front().modp().pow(c);
    if (!prod.is_one()) out.terms_.emplace(MilnorSymbol{SymbolEntry(prod)}, 1);
    return out;
  }
  Normalizer n(field);
  for (const auto& [c, s] : raw) n.push_raw(c, s);
  out.terms_ = n.run();
  return out;
}

MilnorElement normalize(const FormalSum& raw) {
  if (raw.empty() || raw.front().second.empty())
    throw DomainError(ErrorKind::DegreeMismatch, "cannot infer field from an empty formal sum");
  return normalize(raw, raw.front().second.front().field(), static_cast<int>(raw.front().second.size()));
}

MilnorElement symbol(const MilnorSymbol& entries, std::int64_t coef) {
  return normalize({{coef, entries}});
}

MilnorElement MilnorElement::zero(const Field& field, int degree) { return MilnorElement(field, degree); }

MilnorElement MilnorElement::integer(const Field& field, std::int64_t n) {
  return normalize({{n, {}}}, field, 0);
}

MilnorElement MilnorElement::ell(const SymbolEntry& a) { return normalize({{1, {a}}}, a.field(), 1); }

FormalSum MilnorElement::to_formal() const {
  FormalSum out;
  for (const auto& [s, c] : terms_) out.emplace_back(c, s);
  return out;
}

std::string MilnorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || s.empty()) os << a;
    if (!s.empty()) os << symbol_str(s);
    first = false;
  }
  return os.str();
}

namespace {
void require_compatible(const MilnorElement& x, const MilnorElement& y, bool same_degree) {
  if (x.field() != y.field())
    throw DomainError(ErrorKind::MixedFields, "elements over " + x.field().str() + " and " + y.field().str());
  if (same_degree && x.degree() != y.degree())
    throw DomainError(ErrorKind::DegreeMismatch, "degrees " + std::to_string(x.degree()) + " and " +
                                                     std::to_string(y.degree()));
}
}  // namespace

MilnorElement k_add(const MilnorElement& x, const MilnorElement& y) {
  require_compatible(x, y, true);
  FormalSum raw = x.to_formal();
  for (auto& t : y.to_formal()) raw.push_back(std::move(t));
  return normalize(raw, x.field(), x.degree());
}

MilnorElement k_scale(std::int64_t n, const MilnorElement& x) {
  FormalSum raw = x.to_formal();
  for (auto& t : raw) t.first *= n;
  return normalize(raw, x.field(), x.degree());
}

MilnorElement k_sub(const MilnorElement& x, const MilnorElement& y) { return k_add(x, k_scale(-1, y)); }

MilnorElement k_mul(const MilnorElement& x, const MilnorElement& y) {
  require_compatible(x, y, false);
  FormalSum raw;
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) {
      MilnorSymbol s = sx;
      s.insert(s.end(), sy.begin(), sy.end());
      raw.emplace_back(cx * cy, std::move(s));
    }
  return normalize(raw, x.field(), x.degree() + y.degree());
}

ZeroStatus is_zero(const MilnorElement& x) {
  return x.empty() ? ZeroStatus::Zero : ZeroStatus::UnknownNonzero;
}

Rat k1_to_rat(const MilnorElement& x) {
  if (x.field() != Field::rational()) throw DomainError(ErrorKind::MixedFields, "expected an element over Q");
  if (x.degree() != 1) throw DomainError(ErrorKind::DegreeMismatch, "expected a K_1 element");
  Rat acc(1);
  for (const auto& [s, c] : x.terms()) acc *= s.front().rat().pow(c);
  return acc;
}

ModP k1_to_modp(const MilnorElement& x) {
  if (x.field().kind != Field::Kind::ModP) throw DomainError(ErrorKind::MixedFields, "expected an element over F_p");
  if (x.degree() != 1) throw DomainError(ErrorKind::DegreeMismatch, "expected a K_1 element");
  ModP acc{1, x.field().prime};
  for (const auto& [s, c] : x.terms()) acc = acc * s.front().modp().pow(c);
  return acc;
}

}  // namespace milreg::milnor
