#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hocd {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  SizeExceeded,
  InvalidElement,
  DivisionByZero,
  ExponentOutOfRange,
  TooManyCoefficients,
  NoSymbolicForm,
  OrderTooHigh,
  FieldMismatch,
  ReductionUnavailable,
  PreconditionViolated,
  NotQuadraticForm,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures surface as this exception; kind() lets callers map
// them to exit codes or assert on them in tests.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hocd
