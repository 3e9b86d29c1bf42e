#pragma once

#include "fanforge/polynomial.hpp"
#include "fanforge/symbol_table.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fanforge {

// Exact element of Q[s1..sk] reduced modulo the per-symbol minimal
// polynomials. In transcendental mode a scalar is a fraction num/den of
// polynomials; in every other mode den is identically 1.
//
// A default-constructed or rational-literal Scalar carries no table and
// adopts the table of whatever it is combined with.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : num_(Rational(value)) {}
  Scalar(long value) : num_(Rational(value)) {}
  Scalar(const Rational& value) : num_(value) {}

  static Scalar symbol(const TablePtr& table, std::size_t index);
  static Scalar symbol(const TablePtr& table, std::string_view name);
  static Scalar fraction(const TablePtr& table, Polynomial num, Polynomial den);

  const TablePtr& table() const { return table_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Precondition: is_rational().
  Rational to_rational() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  // Equality of values under the model assumption (equality of normal forms).
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend Scalar reduce(const TablePtr& table, const Polynomial& raw);
  friend Scalar invert(const Scalar& x);

  void normalize();

  TablePtr table_;
  Polynomial num_;
  Polynomial den_ = Polynomial(Rational(1));
};

using Vector = std::vector<Scalar>;

// Normal form of a raw polynomial expression in the table's symbols.
Scalar reduce(const TablePtr& table, const Polynomial& raw);

// -1, 0 or +1. Zero is decided symbolically; nonzero signs by interval
// evaluation with bisection refinement, up to the table's sign budget.
int sign(const Scalar& x);
int compare(const Scalar& a, const Scalar& b);

Scalar invert(const Scalar& x);

// Coefficient of each reduced monomial; requires a denominator-free scalar.
std::map<Monomial, Rational> rational_components(const Scalar& x);

// Rational enclosure after `level` refinements (denominator must exclude zero).
RationalInterval enclose(const Scalar& x, unsigned level);
// Rational number strictly between a and b (a < b), via interval refinement.
Rational rational_between(const Scalar& a, const Scalar& b);
// Rational r with r < x (below) or r > x (above).
Rational rational_below(const Scalar& x);
Rational rational_above(const Scalar& x);
// Display-only floating approximation.
double approximate(const Scalar& x);

const TablePtr& merge_tables(const TablePtr& a, const TablePtr& b);

}  // namespace fanforge
