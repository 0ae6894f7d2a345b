#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace milreg::exact {

// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : value_(0) {}
  Rat(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p/q" or "p" with an optional leading sign. Throws
  // std::invalid_argument on malformed text or a zero denominator.
  static Rat parse(const std::string& text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Canonical text: "p/q", or "p" when the denominator is one.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat inverse() const;
  Rat pow(long exponent) const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ + b.value_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ - b.value_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ * b.value_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

// Total order used for symbol entries: (numerator, denominator) lexicographic.
bool lex_less(const Rat& a, const Rat& b);
int lex_compare(const Rat& a, const Rat& b);

}  // namespace milreg::exact
