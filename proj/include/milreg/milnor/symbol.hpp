#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "milreg/exact/factored.hpp"
#include "milreg/exact/padic.hpp"
#include "milreg/exact/rat.hpp"

namespace milreg::milnor {

using exact::FactoredRational;
using exact::ModP;
using exact::Rat;

// The coefficient field an element lives over: Q, Q(t), or F_p.
struct Field {
  enum class Kind { Rational, FunctionField, ModP };
  Kind kind = Kind::Rational;
  std::uint64_t prime = 0;  // only for ModP

  static Field rational() { return {Kind::Rational, 0}; }
  static Field function_field() { return {Kind::FunctionField, 0}; }
  static Field mod_p(std::uint64_t p) { return {Kind::ModP, p}; }
  std::string str() const;
  friend bool operator==(const Field&, const Field&) = default;
};

// One slot a of a symbol {.., a, ..}: a nonzero element of the field.
class SymbolEntry {
 public:
  explicit SymbolEntry(Rat value);
  explicit SymbolEntry(FactoredRational value) : value_(std::move(value)) {}
  explicit SymbolEntry(ModP value) : value_(value) {}

  Field field() const;
  bool is_rat() const { return std::holds_alternative<Rat>(value_); }
  bool is_fn() const { return std::holds_alternative<FactoredRational>(value_); }
  bool is_modp() const { return std::holds_alternative<ModP>(value_); }
  const Rat& rat() const { return std::get<Rat>(value_); }
  const FactoredRational& fn() const { return std::get<FactoredRational>(value_); }
  const ModP& modp() const { return std::get<ModP>(value_); }

  bool is_one() const;
  bool is_minus_one() const;
  // (t - a) with unit constant, i.e. an irreducible linear atom of Q(t).
  bool is_linear_atom() const;

  std::string str() const;

  friend bool operator==(const SymbolEntry&, const SymbolEntry&) = default;

 private:
  std::variant<Rat, FactoredRational, ModP> value_;
};

SymbolEntry minus_one(const Field& field);

// Canonical total order: Rat by (num, den); FactoredRational by (constant,
// factor list); ModP by representative.
int compare_entries(const SymbolEntry& a, const SymbolEntry& b);

// a + b == 1 and a + b == 0, decided exactly.
bool entries_sum_to_one(const SymbolEntry& a, const SymbolEntry& b);
bool entries_sum_to_zero(const SymbolEntry& a, const SymbolEntry& b);

using MilnorSymbol = std::vector<SymbolEntry>;

struct SymbolLess {
  bool operator()(const MilnorSymbol& a, const MilnorSymbol& b) const;
};

std::string symbol_str(const MilnorSymbol& s);

}  // namespace milreg::milnor
