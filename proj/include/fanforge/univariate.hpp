#pragma once

#include "fanforge/polynomial.hpp"

#include <vector>

namespace fanforge::univariate {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
using Coeffs = std::vector<Rational>;

void trim(Coeffs& p);
int degree(const Coeffs& p);  // -1 for the zero polynomial
Rational evaluate(const Coeffs& p, const Rational& x);
Coeffs derivative(const Coeffs& p);
Coeffs multiply(const Coeffs& a, const Coeffs& b);
Coeffs remainder(const Coeffs& a, const Coeffs& b);

// Number of distinct real roots in the half-open interval (lo, hi], by Sturm's theorem.
int count_real_roots(const Coeffs& p, const Rational& lo, const Rational& hi);

// Irreducibility over Q by rational-root elimination and Kronecker's
// interpolation search for factors up to half the degree. Throws
// InvalidSymbolTable if the divisor search exceeds `work_limit` candidates.
bool is_irreducible_over_q(const Coeffs& p, long work_limit = 2'000'000);

}  // namespace fanforge::univariate
