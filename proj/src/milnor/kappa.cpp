#include "milreg/milnor/kappa.hpp"

#include <optional>

#include "milreg/error.hpp"

namespace milreg::milnor {

KappaPiElement::KappaPiElement(MilnorElement plain, MilnorElement pi_part)
    : plain_(std::move(plain)), pi_part_(std::move(pi_part)) {
  if (plain_.field() != pi_part_.field())
    throw DomainError(ErrorKind::MixedFields, "plain and Pi parts over different fields");
  if (pi_part_.degree() != plain_.degree() - 1)
    throw DomainError(ErrorKind::DegreeMismatch, "Pi part must have degree one less than the plain part");
}

KappaPiElement KappaPiElement::zero(const Field& field, int degree) {
  return {MilnorElement::zero(field, degree), MilnorElement::zero(field, degree - 1)};
}

KappaPiElement KappaPiElement::from_plain(MilnorElement plain) {
  auto z = MilnorElement::zero(plain.field(), plain.degree() - 1);
  return {std::move(plain), std::move(z)};
}

KappaPiElement KappaPiElement::pi(const Field& field, std::int64_t k) {
  return {MilnorElement::zero(field, 1), MilnorElement::integer(field, k)};
}

std::string KappaPiElement::str() const {
  if (pi_part_.empty()) return plain_.str();
  std::string p = "(" + pi_part_.str() + ")Pi";
  if (plain_.empty()) return p;
  return plain_.str() + " + " + p;
}

KappaPiElement kappa_pi_add(const KappaPiElement& x, const KappaPiElement& y) {
  return {k_add(x.plain(), y.plain()), k_add(x.pi_part(), y.pi_part())};
}

KappaPiElement kappa_pi_scale(std::int64_t n, const KappaPiElement& x) {
  return {k_scale(n, x.plain()), k_scale(n, x.pi_part())};
}

namespace {

// A word is a sequence of entries and Pi tokens; nullopt stands for Pi.
using Token = std::optional<SymbolEntry>;
using Word = std::vector<Token>;

}  // namespace

KappaPiElement kappa_pi_mul(const KappaPiElement& x, const KappaPiElement& y) {
  if (x.field() != y.field())
    throw DomainError(ErrorKind::MixedFields, "kappa product over " + x.field().str() + " and " + y.field().str());
  const Field field = x.field();
  const SymbolEntry eps = minus_one(field);
  FormalSum plain;
  FormalSum pi;

  auto words = [&](const MilnorElement& a, bool a_pi, const MilnorElement& b, bool b_pi) {
    for (const auto& [sa, ca] : a.terms())
      for (const auto& [sb, cb] : b.terms()) {
        Word w;
        for (const auto& e : sa) w.emplace_back(e);
        if (a_pi) w.emplace_back(std::nullopt);
        for (const auto& e : sb) w.emplace_back(e);
        if (b_pi) w.emplace_back(std::nullopt);
        // Rewrite to normal word.
        std::int64_t coef = ca * cb;
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].has_value()) continue;
            if (w[i + 1].has_value()) {
              std::swap(w[i], w[i + 1]);
              coef = -coef;
            } else {
              w[i] = eps;
            }
            changed = true;
            break;
          }
        }
        MilnorSymbol s;
        bool trailing_pi = false;
        for (const auto& t : w) {
          if (t) s.push_back(*t);
          else trailing_pi = true;
        }
        (trailing_pi ? pi : plain).emplace_back(coef, std::move(s));
      }
  };
  words(x.plain(), false, y.plain(), false);
  words(x.plain(), false, y.pi_part(), true);
  words(x.pi_part(), true, y.plain(), false);
  words(x.pi_part(), true, y.pi_part(), true);

  const int degree = x.degree() + y.degree();
  return {normalize(plain, field, degree), normalize(pi, field, degree - 1)};
}

}  // namespace milreg::milnor
