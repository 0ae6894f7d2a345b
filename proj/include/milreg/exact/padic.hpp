#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "milreg/exact/rat.hpp"

namespace milreg::exact {

// Nonzero class r mod p with 0 < r < p.
struct ModP {
  std::uint64_t r = 1;
  std::uint64_t p = 2;

  static ModP make(std::int64_t value, std::uint64_t prime);  // reduces value mod p
  ModP operator*(const ModP& o) const;
  ModP inverse() const;
  ModP pow(std::int64_t e) const;
  bool is_one() const { return r == 1; }
  friend bool operator==(const ModP&, const ModP&) = default;
};

bool is_prime(std::uint64_t n);

long padic_valuation(const Rat& x, std::uint64_t p);
// Class of x * p^{-v_p(x)} in F_p^x.
ModP padic_residue(const Rat& x, std::uint64_t p);

// |n| = prod p_i^{e_i} by trial division; n != 0. Primes increasing.
std::vector<std::pair<mpz_class, long>> factor_integer(const mpz_class& n);

}  // namespace milreg::exact
