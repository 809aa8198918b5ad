#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace novikov {

enum class ErrorCode {
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  InvalidArgument,
  NotAnIdeal,
  NotLieSolvable,
  CharTwoUnsupported,
  NotCommutativeAssociative,
  NotADerivation,
  NotInDomain,
  PreconditionFailed,
  BudgetExceeded,
  InternalInconsistency,
};

/// Machine-readable name used in JSON reports, e.g. "NOT_LIE_SOLVABLE".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace novikov
