#include "fanforge/error.hpp"

namespace fanforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::InvalidSymbolTable: return "InvalidSymbolTable";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::SignUndecidable: return "SignUndecidable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotASimplex: return "NotASimplex";
    case ErrorCode::ImproperIntersection: return "ImproperIntersection";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::GhostInSimplex: return "GhostInSimplex";
    case ErrorCode::InvalidGaleDual: return "InvalidGaleDual";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::NotATriangulation: return "NotATriangulation";
    case ErrorCode::ZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::InvalidShelling: return "InvalidShelling";
    case ErrorCode::NoShellingFound: return "NoShellingFound";
    case ErrorCode::TieUnresolvable: return "TieUnresolvable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace fanforge
