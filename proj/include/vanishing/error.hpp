#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vanishing {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidModulus,
  ArityMismatch,
  DegreeOverflow,
  SingularMatrix,
  NonAdmissibleColumn,
  InvalidOrder,
  InsertZero,
  EmptyPointSet,
  DuplicatePoints,
  InconsistentSystem,
  UnsortedList,
  ParseError,
  InternalInvariant,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonAdmissibleColumn: return "NonAdmissibleColumn";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InsertZero: return "InsertZero";
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::UnsortedList: return "UnsortedList";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI diagnostics can surface it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vanishing
