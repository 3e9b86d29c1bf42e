#pragma once

#include "fanforge/scalar.hpp"

#include <string_view>

namespace fanforge {

// Scalar expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] digits)?
//   atom   := number | identifier | '(' expr ')'
//   number := digits ['.' digits]
// U+2212 (minus sign) and U+00B7 (middle dot) are accepted as '-' and '*'.
// Errors are ParseError with a 1-based column.
Scalar parse_scalar(const TablePtr& table, std::string_view text);

}  // namespace fanforge
