#pragma once

#include "fanforge/error.hpp"
#include "fanforge/parse.hpp"
#include "fanforge/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanforge::testing {

inline Rational Q(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Table with one symbol equal to sqrt(q), algebraic with refiner.
inline TablePtr sqrt_table(const std::string& name = "s", long q = 2) {
  SymbolSpec spec;
  spec.name = name;
  spec.min_poly = univariate::Coeffs{Rational(-q), Rational(0), Rational(1)};
  // Integer part plus a generous radius around the midpoint.
  long root = 0;
  while ((root + 1) * (root + 1) <= q) ++root;
  spec.approx_mid = Rational(2 * root + 1, 2);
  spec.approx_radius = Rational(1, 2);
  spec.sqrt_of = Rational(q);
  return SymbolTable::create({spec});
}

// Transcendental symbols with fixed rational enclosures (no refiner).
inline TablePtr transcendental_table(const std::vector<std::pair<std::string, Rational>>& values) {
  std::vector<SymbolSpec> specs;
  for (const auto& [name, mid] : values) {
    SymbolSpec spec;
    spec.name = name;
    spec.approx_mid = mid;
    spec.approx_radius = Rational(1, 1000000);
    specs.push_back(spec);
  }
  return SymbolTable::create(specs);
}

// Several square roots sqrt(q_i), each algebraic with its own minimal polynomial.
inline TablePtr sqrt_tables(const std::vector<std::pair<std::string, long>>& roots) {
  std::vector<SymbolSpec> specs;
  for (const auto& [name, q] : roots) {
    SymbolSpec spec;
    spec.name = name;
    spec.min_poly = univariate::Coeffs{Rational(-q), Rational(0), Rational(1)};
    long root = 0;
    while ((root + 1) * (root + 1) <= q) ++root;
    spec.approx_mid = Rational(2 * root + 1, 2);
    spec.approx_radius = Rational(1, 2);
    spec.sqrt_of = Rational(q);
    specs.push_back(spec);
  }
  return SymbolTable::create(specs);
}

inline Scalar S(const TablePtr& table, const std::string& text) { return parse_scalar(table, text); }

inline Vector vec(const TablePtr& table, std::initializer_list<const char*> entries) {
  Vector out;
  for (const char* e : entries) out.push_back(S(table, e));
  return out;
}

// Error code raised by f, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fanforge::testing
