#pragma once

#include "fanforge/polynomial.hpp"
#include "fanforge/univariate.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanforge {

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

struct SymbolSpec {
  std::string name;
  // Ascending coefficients of a monic irreducible polynomial over Q.
  std::optional<univariate::Coeffs> min_poly;
  Rational approx_mid;
  Rational approx_radius;
  // Refiner "sqrt-of-rational(q)": the symbol's value is the positive root of q.
  std::optional<Rational> sqrt_of;
};

enum class ScalarMode {
  Rational,        // no symbols declared
  Algebraic,       // every symbol has a minimal polynomial
  Transcendental,  // no symbol has one; scalars are fractions of polynomials
};

inline constexpr unsigned kDefaultSignBudget = 64;

// Declared symbols plus the numeric data behind the sign oracle. Immutable
// once built; the enclosure cache only memoizes deterministic bisections.
//
// Model assumption (not checked): the reduced monomials evaluate to Q-linearly
// independent reals. This holds for one algebraic symbol or for algebraically
// independent transcendentals; combining e.g. sqrt(2) and sqrt(8) violates it.
class SymbolTable {
 public:
  static std::shared_ptr<const SymbolTable> create(std::vector<SymbolSpec> symbols,
                                                   unsigned sign_budget = kDefaultSignBudget);
  static std::shared_ptr<const SymbolTable> rational(unsigned sign_budget = kDefaultSignBudget);

  std::size_t size() const { return symbols_.size(); }
  const SymbolSpec& symbol(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  ScalarMode mode() const { return mode_; }
  unsigned sign_budget() const { return sign_budget_; }

  // Minimal-polynomial degree of symbol i, or 0 when it has none.
  std::size_t relation_degree(std::size_t i) const;
  // x_i^e reduced modulo the minimal polynomial of symbol i (ascending, size = degree).
  univariate::Coeffs reduced_power(std::size_t i, std::uint32_t e) const;

  bool refinable(std::size_t i) const;
  // Enclosure of symbol i after `level` bisections (clamped for non-refinable symbols).
  RationalInterval enclosure(std::size_t i, unsigned level) const;

  SymbolTable(const SymbolTable&) = delete;
  SymbolTable& operator=(const SymbolTable&) = delete;

 private:
  SymbolTable(std::vector<SymbolSpec> symbols, ScalarMode mode, unsigned sign_budget);

  std::vector<SymbolSpec> symbols_;
  ScalarMode mode_;
  unsigned sign_budget_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::vector<RationalInterval>> levels_;
  mutable std::vector<std::vector<univariate::Coeffs>> powers_;
};

using TablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace fanforge
