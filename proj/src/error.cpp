#include "milreg/error.hpp"

namespace milreg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstant: return "ZeroConstant";
    case ErrorKind::AtZeroOrPole: return "AtZeroOrPole";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::NonInvertibleEntry: return "NonInvertibleEntry";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidUniformizer: return "InvalidUniformizer";
    case ErrorKind::InvalidTorus: return "InvalidTorus";
    case ErrorKind::InvalidDivisor: return "InvalidDivisor";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::LatticePoint: return "LatticePoint";
    case ErrorKind::OnDivisor: return "OnDivisor";
    case ErrorKind::UnsupportedArity: return "UnsupportedArity";
    case ErrorKind::OverlappingDivisors: return "OverlappingDivisors";
    case ErrorKind::FixtureFailure: return "FixtureFailure";
  }
  return "Unknown";
}

}  // namespace milreg
