#include "fanforge/polynomial.hpp"

#include <algorithm>

namespace fanforge {

void strip_trailing_zeros(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

bool monomial_divides(const Monomial& divisor, const Monomial& m) {
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    if (divisor[i] > exponent_of(m, i)) return false;
  }
  return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& divisor) {
  Monomial out = m;
  out.resize(std::max(m.size(), divisor.size()), 0);
  for (std::size_t i = 0; i < divisor.size(); ++i) out[i] -= divisor[i];
  strip_trailing_zeros(out);
  return out;
}

std::uint32_t exponent_of(const Monomial& m, std::size_t var) { return var < m.size() ? m[var] : 0; }

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return term(std::move(m), Rational(1));
}

Polynomial Polynomial::term(Monomial m, const Rational& coeff) {
  Polynomial p;
  strip_trailing_zeros(m);
  p.add_term(m, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, exponent_of(m, var));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const { return *terms_.rbegin(); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  // With a single divisor the lex division remainder is zero iff divisor | dividend.
  const auto& [lead_m, lead_c] = divisor.leading_term();
  Polynomial rest = *this;
  Polynomial quotient;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    if (!monomial_divides(lead_m, m)) return std::nullopt;
    Polynomial step = Polynomial::term(monomial_quotient(m, lead_m), c / lead_c);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace fanforge
