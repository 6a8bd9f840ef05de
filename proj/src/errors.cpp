#include "hocd/errors.hpp"

namespace hocd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::TooManyCoefficients: return "TooManyCoefficients";
    case ErrorKind::NoSymbolicForm: return "NoSymbolicForm";
    case ErrorKind::OrderTooHigh: return "OrderTooHigh";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ReductionUnavailable: return "ReductionUnavailable";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotQuadraticForm: return "NotQuadraticForm";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hocd
