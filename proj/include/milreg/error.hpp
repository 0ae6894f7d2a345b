#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milreg {

enum class ErrorKind {
  ZeroConstant,
  AtZeroOrPole,
  ZeroInput,
  InvalidPrime,
  MixedFields,
  NonInvertibleEntry,
  DegreeMismatch,
  InvalidUniformizer,
  InvalidTorus,
  InvalidDivisor,
  InvalidGrid,
  LatticePoint,
  OnDivisor,
  UnsupportedArity,
  OverlappingDivisors,
  FixtureFailure,
};

std::string_view to_string(ErrorKind kind);

// Raised by the mathematical modules when an input violates a documented
// precondition. The kind is machine readable; what() carries the detail.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace milreg
