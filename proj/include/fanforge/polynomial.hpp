#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fanforge {

using Rational = mpq_class;

// Exponent vector with trailing zeros stripped, so that the constant monomial
// is always the empty vector whatever the number of declared symbols.
// std::vector's lexicographic order then coincides with the lex monomial order.
using Monomial = std::vector<std::uint32_t>;

void strip_trailing_zeros(Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& divisor, const Monomial& m);
Monomial monomial_quotient(const Monomial& m, const Monomial& divisor);
std::uint32_t exponent_of(const Monomial& m, std::size_t var);
std::uint32_t total_degree(const Monomial& m);

// Sparse multivariate polynomial over Q. No reduction is applied here; the
// scalar layer owns normal forms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  static Polynomial variable(std::size_t index);
  static Polynomial term(Monomial m, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t degree_in(std::size_t var) const;

  void add_term(const Monomial& m, const Rational& coeff);

  // Lex-largest term; precondition: nonzero.
  const Terms::value_type& leading_term() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Quotient when `divisor` divides *this exactly in Q[x1..xk], nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

 private:
  Terms terms_;
};

std::string rational_to_string(const Rational& q);

}  // namespace fanforge
