#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanforge {

// Stable error identifiers. The CLI prints error_code_name() verbatim, so
// renaming an enumerator is a breaking change for scripts.
enum class ErrorCode {
  UnknownSymbol,
  InvalidSymbolTable,
  TableMismatch,
  SignUndecidable,
  DivisionByZero,
  NotAField,
  NotPolynomial,
  DimensionMismatch,
  NotSpanning,
  InvalidConfiguration,
  NotNormalized,
  IndexOutOfRange,
  NotASimplex,
  ImproperIntersection,
  NotComplete,
  GhostInSimplex,
  InvalidGaleDual,
  DegeneratePoint,
  NotATriangulation,
  ZeroTotalWeight,
  DimensionUnsupported,
  InvalidShelling,
  NoShellingFound,
  TieUnresolvable,
  ParseError,
  InternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace fanforge
