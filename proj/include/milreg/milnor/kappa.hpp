#pragma once

#include <string>

#include "milreg/milnor/element.hpp"

namespace milreg::milnor {

// a + b*Pi in A(Pi), with deg a = n and deg b = n - 1.
class KappaPiElement {
 public:
  KappaPiElement(MilnorElement plain, MilnorElement pi_part);
  static KappaPiElement zero(const Field& field, int degree);
  static KappaPiElement from_plain(MilnorElement plain);
  // k * Pi (degree 1).
  static KappaPiElement pi(const Field& field, std::int64_t k = 1);

  const MilnorElement& plain() const { return plain_; }
  const MilnorElement& pi_part() const { return pi_part_; }
  int degree() const { return plain_.degree(); }
  const Field& field() const { return plain_.field(); }

  std::string str() const;
  friend bool operator==(const KappaPiElement&, const KappaPiElement&) = default;

 private:
  MilnorElement plain_;
  MilnorElement pi_part_;
};

KappaPiElement kappa_pi_add(const KappaPiElement& x, const KappaPiElement& y);
KappaPiElement kappa_pi_scale(std::int64_t n, const KappaPiElement& x);

// Product in A(Pi). Every word is rewritten with Pi s -> -s Pi for each
// entry s and Pi Pi -> l(-1) Pi until at most one trailing Pi remains.
KappaPiElement kappa_pi_mul(const KappaPiElement& x, const KappaPiElement& y);

}  // namespace milreg::milnor
