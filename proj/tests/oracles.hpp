#pragma once

#include "fanforge/fourier_motzkin.hpp"

#include <optional>
#include <random>
#include <set>
#include <vector>

namespace fanforge::testing {

// a*x + b*y + c (> or >=) 0 with small integer data.
struct PlanarConstraint {
  long a;
  long b;
  long c;
  bool strict;
};

// Random planar system inside the box |x|, |y| <= 3. Coefficients lie in
// [-2, 2] so every arrangement vertex has denominator at most 8.
inline std::vector<PlanarConstraint> random_planar_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<long> constant(-3, 3);
  std::uniform_int_distribution<int> count(1, 5);
  std::vector<PlanarConstraint> out{{1, 0, 3, false}, {-1, 0, 3, false}, {0, 1, 3, false}, {0, -1, 3, false}};
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    PlanarConstraint q{coef(rng), coef(rng), constant(rng), (rng() & 1) != 0};
    if (q.a == 0 && q.b == 0) q.a = 1;
    out.push_back(q);
  }
  return out;
}

inline LinearSystem to_system(const std::vector<PlanarConstraint>& cs) {
  LinearSystem s;
  s.variables = 2;
  for (const auto& q : cs) {
    AffineForm& f = q.strict ? s.add_strict() : s.add_weak();
    f.coeffs = {Scalar(q.a), Scalar(q.b)};
    f.constant = Scalar(q.c);
  }
  return s;
}

// Brute-force oracle: scans x = i/q for all q <= 64 in [-3, 3] and decides
// the y-slice exactly. Complete for the systems above, because the x-shadow of
// the feasible set is an interval whose endpoints have denominators <= 8.
inline bool grid_feasible(const std::vector<PlanarConstraint>& cs) {
  static const std::vector<Rational> xs = [] {
    std::set<Rational> values;
    for (long q = 1; q <= 64; ++q) {
      for (long i = -3 * q; i <= 3 * q; ++i) {
        Rational r(i, q);
        r.canonicalize();
        values.insert(r);
      }
    }
    return std::vector<Rational>(values.begin(), values.end());
  }();
  for (const auto& x : xs) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_strict = false;
    bool hi_strict = false;
    bool ok = true;
    for (const auto& q : cs) {
      const Rational rest = Rational(q.a) * x + Rational(q.c);
      if (q.b == 0) {
        if (q.strict ? rest <= 0 : rest < 0) ok = false;
        continue;
      }
      const Rational bound = -rest / Rational(q.b);
      if (q.b > 0) {
        if (!lo || bound > *lo || (bound == *lo && q.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || q.strict) : q.strict;
          lo = bound;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && q.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || q.strict) : q.strict;
          hi = bound;
        }
      }
    }
    if (!ok) continue;
    if (lo && hi) {
      if (*lo < *hi || (*lo == *hi && !lo_strict && !hi_strict)) return true;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace fanforge::testing
