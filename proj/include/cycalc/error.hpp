#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycalc {

enum class ErrorKind {
  Overflow,
  UnresolvedGenerator,
  UnknownBase,
  InvalidParams,
  ParseError,
  ValidationError,
  DegreeOutOfRange,
  HypothesisViolation,
  UnsupportedConstruction,
  NotPureShiftable,
  InvalidWeights,
  NegativeDimension,
  NotIntegerCY,
  HodgeUnsupported,
  // Two independent computations disagreed; never a user error.
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cycalc
