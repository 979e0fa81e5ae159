#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvesys {

// Named domain errors. The CLI maps every one of these to exit code 1.
enum class ErrorCode {
  DescriptorMismatch,
  DivisionByZero,
  NotPrime,
  NotIrreducible,
  ZeroPolynomial,
  ZeroForm,
  UnsupportedField,
  DuplicateRoots,
  DegreeMismatch,
  PointNotOnCurve,
  SingularPoint,
  SingularCurve,
  SharedComponent,
  CoincidentLines,
  InvariantViolation,
  CarnotViolated,
  InconsistentSystem,
  NoAdmissibleSolution,
  AttemptsExhausted,
  PreconditionViolation,
  ROutOfRange,
  DegreeDeficit,
  EmptySystem,
  DimensionZero,
  FieldTooSmall,
  CertificationFailed,
  InsufficientRationalPoints,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, ErrorCode code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace curvesys
