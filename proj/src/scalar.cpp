#include "fanforge/scalar.hpp"

#include "fanforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fanforge {

namespace {

bool trivial_table(const TablePtr& t) { return !t || t->size() == 0; }

void check_symbols(const TablePtr& table, const Polynomial& p) {
  const std::size_t known = table ? table->size() : 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.size() > known) fail(ErrorCode::UnknownSymbol, "expression uses a symbol index " + std::to_string(m.size() - 1) + " not declared in the table");
  }
}

Polynomial reduce_polynomial(const TablePtr& table, const Polynomial& raw) {
  check_symbols(table, raw);
  if (!table || table->mode() != ScalarMode::Algebraic) return raw;
  Polynomial current = raw;
  for (std::size_t i = 0; i < table->size(); ++i) {
    const std::size_t k = table->relation_degree(i);
    bool needs_work = false;
    for (const auto& [m, c] : current.terms()) {
      if (exponent_of(m, i) >= k) {
        needs_work = true;
        break;
      }
    }
    if (!needs_work) continue;
    Polynomial next;
    for (const auto& [m, c] : current.terms()) {
      const std::uint32_t e = exponent_of(m, i);
      if (e < k) {
        next.add_term(m, c);
        continue;
      }
      const auto folded = table->reduced_power(i, e);
      for (std::size_t j = 0; j < folded.size(); ++j) {
        if (folded[j] == 0) continue;
        Monomial mm = m;
        mm.resize(std::max(mm.size(), i + 1), 0);
        mm[i] = static_cast<std::uint32_t>(j);
        strip_trailing_zeros(mm);
        next.add_term(mm, c * folded[j]);
      }
    }
    current = std::move(next);
  }
  return current;
}

Rational rational_pow(const Rational& base, std::uint32_t e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

RationalInterval interval_pow(const RationalInterval& iv, std::uint32_t e) {
  if (e == 0) return {Rational(1), Rational(1)};
  const Rational a = rational_pow(iv.lo, e);
  const Rational b = rational_pow(iv.hi, e);
  if (e % 2 == 1 || iv.lo >= 0) return {a, b};
  if (iv.hi <= 0) return {b, a};
  return {Rational(0), std::max(a, b)};
}

RationalInterval interval_mul(const RationalInterval& x, const RationalInterval& y) {
  const Rational p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval evaluate_interval(const TablePtr& table, const Polynomial& p, unsigned level) {
  RationalInterval acc{Rational(0), Rational(0)};
  for (const auto& [m, c] : p.terms()) {
    RationalInterval term{c, c};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      term = interval_mul(term, interval_pow(table->enclosure(i, level), m[i]));
    }
    acc.lo += term.lo;
    acc.hi += term.hi;
  }
  return acc;
}

bool uses_refinable_symbol(const TablePtr& table, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0 && table->refinable(i)) return true;
    }
  }
  return false;
}

int polynomial_sign(const TablePtr& table, const Polynomial& p) {
  if (p.is_zero()) return 0;
  if (p.is_constant()) return sgn(p.constant_term());
  const bool refinable = uses_refinable_symbol(table, p);
  const unsigned budget = table->sign_budget();
  for (unsigned level = 0; level <= budget; ++level) {
    const RationalInterval iv = evaluate_interval(table, p, level);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (!refinable) break;
  }
  fail(ErrorCode::SignUndecidable, "cannot separate a nonzero value from 0; supply tighter approximation data");
}

std::string monomial_to_string(const TablePtr& table, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += table->symbol(i).name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string polynomial_to_string(const TablePtr& table, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += rational_to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial_to_string(table, m);
    } else {
      out += rational_to_string(magnitude) + "*" + monomial_to_string(table, m);
    }
  }
  return out;
}

// Solves a square rational system; nullopt when singular.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

const TablePtr& merge_tables(const TablePtr& a, const TablePtr& b) {
  if (a == b || trivial_table(b)) return a;
  if (trivial_table(a)) return b;
  fail(ErrorCode::TableMismatch, "scalars from different symbol tables cannot be combined");
}

Scalar Scalar::symbol(const TablePtr& table, std::size_t index) {
  if (!table || index >= table->size()) fail(ErrorCode::UnknownSymbol, "symbol index " + std::to_string(index));
  Scalar s;
  s.table_ = table;
  s.num_ = Polynomial::variable(index);
  s.normalize();
  return s;
}

Scalar Scalar::symbol(const TablePtr& table, std::string_view name) {
  const auto index = table ? table->index_of(name) : std::nullopt;
  if (!index) fail(ErrorCode::UnknownSymbol, "unknown symbol '" + std::string(name) + "'");
  return symbol(table, *index);
}

Scalar Scalar::fraction(const TablePtr& table, Polynomial num, Polynomial den) {
  Scalar s;
  s.table_ = table;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  if (!s.den_.is_constant() && (!table || table->mode() != ScalarMode::Transcendental)) {
    // Outside transcendental mode a polynomial denominator is folded in by inversion.
    Scalar d = reduce(table, s.den_);
    s.den_ = Polynomial(Rational(1));
    s.normalize();
    return s / d;
  }
  s.normalize();
  return s;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) fail(ErrorCode::NotPolynomial, "scalar " + to_string() + " is not rational");
  return num_.constant_term() / den_.constant_term();
}

void Scalar::normalize() {
  num_ = reduce_polynomial(table_, num_);
  den_ = reduce_polynomial(table_, den_);
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    const Rational c = den_.constant_term();
    if (c != 1) {
      num_ *= Rational(1 / c);
      den_ = Polynomial(Rational(1));
    }
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Polynomial(Rational(1));
    return;
  }
  const Rational lead = den_.leading_term().second;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  table_ = merge_tables(table_, other.table_);
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  table_ = merge_tables(table_, other.table_);
  if (is_zero() || other.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(Rational(1));
    return *this;
  }
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= invert(other); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  merge_tables(a.table_, b.table_);
  if (a.den_.is_constant() && b.den_.is_constant()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string Scalar::to_string() const {
  if (den_.is_constant()) return polynomial_to_string(table_, num_);
  return "(" + polynomial_to_string(table_, num_) + ")/(" + polynomial_to_string(table_, den_) + ")";
}

Scalar reduce(const TablePtr& table, const Polynomial& raw) {
  Scalar s;
  s.table_ = table;
  s.num_ = raw;
  s.normalize();
  return s;
}

int sign(const Scalar& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.to_rational());
  return polynomial_sign(x.table(), x.numerator()) * polynomial_sign(x.table(), x.denominator());
}

int compare(const Scalar& a, const Scalar& b) { return sign(a - b); }

Scalar invert(const Scalar& x) {
  if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (x.is_rational()) {
    Scalar out(Rational(1 / x.to_rational()));
    out.table_ = x.table_;
    return out;
  }
  const TablePtr& table = x.table_;
  if (table->mode() == ScalarMode::Transcendental) {
    Scalar out;
    out.table_ = table;
    out.num_ = x.den_;
    out.den_ = x.num_;
    out.normalize();
    return out;
  }

  // Algebraic mode: solve x * y = 1 on the reduced monomial basis.
  const std::size_t k = table->size();
  std::vector<std::size_t> degrees(k);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < k; ++i) {
    degrees[i] = table->relation_degree(i);
    dim *= degrees[i];
  }
  const auto basis_monomial = [&](std::size_t index) {
    Monomial m(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(index % degrees[i]);
      index /= degrees[i];
    }
    strip_trailing_zeros(m);
    return m;
  };
  const auto basis_index = [&](const Monomial& m) {
    std::size_t index = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
      index += exponent_of(m, i) * stride;
      stride *= degrees[i];
    }
    return index;
  };
  std::vector<std::vector<Rational>> mult(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t j = 0; j < dim; ++j) {
    const Polynomial product = reduce_polynomial(table, x.num_ * Polynomial::term(basis_monomial(j), Rational(1)));
    for (const auto& [m, c] : product.terms()) mult[basis_index(m)][j] = c;
  }
  std::vector<Rational> rhs(dim, Rational(0));
  rhs[0] = 1;
  const auto y = solve_rational(std::move(mult), std::move(rhs));
  if (!y) fail(ErrorCode::NotAField, "declared symbols do not generate a field: " + x.to_string() + " is a zero divisor");
  Polynomial inverse;
  for (std::size_t j = 0; j < dim; ++j) inverse.add_term(basis_monomial(j), (*y)[j]);
  return reduce(table, inverse);
}

std::map<Monomial, Rational> rational_components(const Scalar& x) {
  if (!x.is_polynomial()) fail(ErrorCode::NotPolynomial, "scalar " + x.to_string() + " has a nontrivial denominator");
  return {x.numerator().terms().begin(), x.numerator().terms().end()};
}

RationalInterval enclose(const Scalar& x, unsigned level) {
  if (x.is_rational()) {
    const Rational q = x.to_rational();
    return {q, q};
  }
  const TablePtr& table = x.table();
  const unsigned budget = std::max(level, table->sign_budget());
  for (unsigned l = level; l <= budget; ++l) {
    const RationalInterval den = evaluate_interval(table, x.denominator(), l);
    if (den.contains_zero()) continue;
    const RationalInterval num = evaluate_interval(table, x.numerator(), l);
    return interval_mul(num, {1 / den.hi, 1 / den.lo});
  }
  fail(ErrorCode::SignUndecidable, "denominator enclosure keeps containing zero");
}

Rational rational_between(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return (a.to_rational() + b.to_rational()) / 2;
  const TablePtr& table = merge_tables(a.table(), b.table());
  const unsigned budget = table ? table->sign_budget() : kDefaultSignBudget;
  for (unsigned level = 0; level <= budget; ++level) {
    const RationalInterval ia = enclose(a, level);
    const RationalInterval ib = enclose(b, level);
    if (ia.hi < ib.lo) return (ia.hi + ib.lo) / 2;
  }
  fail(ErrorCode::SignUndecidable, "cannot separate " + a.to_string() + " from " + b.to_string());
}

Rational rational_below(const Scalar& x) {
  if (x.is_rational()) return x.to_rational() - 1;
  const Rational lo = enclose(x, 0).lo;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  return Rational(f - 1);
}

Rational rational_above(const Scalar& x) {
  if (x.is_rational()) return x.to_rational() + 1;
  const Rational hi = enclose(x, 0).hi;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  return Rational(c + 1);
}

double approximate(const Scalar& x) {
  try {
    const RationalInterval iv = enclose(x, 48);
    return iv.midpoint().get_d();
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace fanforge
