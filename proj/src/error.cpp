#include "curvesys/error.hpp"

namespace curvesys {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::DuplicateRoots: return "DuplicateRoots";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::SharedComponent: return "SharedComponent";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::CarnotViolated: return "CarnotViolated";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::NoAdmissibleSolution: return "NoAdmissibleSolution";
    case ErrorCode::AttemptsExhausted: return "AttemptsExhausted";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::ROutOfRange: return "ROutOfRange";
    case ErrorCode::DegreeDeficit: return "DegreeDeficit";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::InsufficientRationalPoints: return "InsufficientRationalPoints";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace curvesys
