#include "hdc/error.hpp"

namespace hdc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::NonIrreducibleModulus: return "NonIrreducibleModulus";
    case ErrorKind::NonPrimitiveModulus: return "NonPrimitiveModulus";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::CoefficientNotInBaseField: return "CoefficientNotInBaseField";
    case ErrorKind::CosetCollision: return "CosetCollision";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidRadius: return "InvalidRadius";
    case ErrorKind::DegenerateWitness: return "DegenerateWitness";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ChainViolation: return "ChainViolation";
  }
  return "Unknown";
}

}  // namespace hdc
