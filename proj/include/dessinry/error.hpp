#pragma once

#include <stdexcept>
#include <string>

namespace dessinry {

enum class ErrorKind {
  InvalidArgument,
  InvalidTuple,
  InvalidOrigami,
  InvalidResult,
  IndexOutOfRange,
  BoundExceeded,
  NonIntegerGenus,
  PoleAtHalf,
  PoleAtZeroOrOne,
  DegenerateLeadingCoefficient,
  PathTrackingFailure,
  ProductConstraintViolation,
  NoSuchLift,
  Ambiguous,
  ToleranceUnreachable,
  ExpressionMismatch,
  NegativeDiscriminant,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dessinry
