#include "dessinry/error.hpp"

namespace dessinry {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidTuple: return "invalid-tuple";
    case ErrorKind::InvalidOrigami: return "invalid-origami";
    case ErrorKind::InvalidResult: return "invalid-result";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::NonIntegerGenus: return "non-integer-genus";
    case ErrorKind::PoleAtHalf: return "pole-at-half";
    case ErrorKind::PoleAtZeroOrOne: return "pole-at-0-or-1";
    case ErrorKind::DegenerateLeadingCoefficient: return "degenerate-leading-coefficient";
    case ErrorKind::PathTrackingFailure: return "path-tracking-failure";
    case ErrorKind::ProductConstraintViolation: return "product-constraint-violation";
    case ErrorKind::NoSuchLift: return "no-such-lift";
    case ErrorKind::Ambiguous: return "ambiguous";
    case ErrorKind::ToleranceUnreachable: return "tolerance-unreachable";
    case ErrorKind::ExpressionMismatch: return "expression-mismatch";
    case ErrorKind::NegativeDiscriminant: return "negative-discriminant";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace dessinry
