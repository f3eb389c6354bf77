#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdc {

enum class ErrorKind {
  InvalidParameters,
  UnsupportedDegree,
  NonIrreducibleModulus,
  NonPrimitiveModulus,
  DivisionByZeroPolynomial,
  CoefficientNotInBaseField,
  CosetCollision,
  InexactDivision,
  CertificateFailure,
  LengthMismatch,
  BudgetExceeded,
  InvalidRadius,
  DegenerateWitness,
  OutOfRange,
  NotApplicable,
  DimensionMismatch,
  ChainViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported as an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace hdc
