#include "fanforge/fourier_motzkin.hpp"

#include "fanforge/error.hpp"
#include "fanforge/linalg.hpp"

#include <algorithm>
#include <limits>

namespace fanforge {

Scalar AffineForm::evaluate(const Vector& x) const { return dot(coeffs, x) + constant; }

bool satisfies(const LinearSystem& system, const Vector& x) {
  if (x.size() != system.variables) return false;
  for (const auto& f : system.equalities) {
    if (!f.evaluate(x).is_zero()) return false;
  }
  for (const auto& f : system.weak) {
    if (sign(f.evaluate(x)) < 0) return false;
  }
  for (const auto& f : system.strict) {
    if (sign(f.evaluate(x)) <= 0) return false;
  }
  return true;
}

namespace {

struct Inequality {
  Vector a;
  Scalar c;
  bool strict = false;
};

struct Substitution {
  std::size_t var;
  Vector coeffs;
  Scalar constant;
};

struct Elimination {
  std::size_t var;
  std::vector<Inequality> constraints;
};

void check_shape(const LinearSystem& s) {
  for (const auto* list : {&s.equalities, &s.weak, &s.strict}) {
    for (const auto& f : *list) {
      if (f.coeffs.size() != s.variables) fail(ErrorCode::DimensionMismatch, "affine form has the wrong number of coefficients");
    }
  }
}

// Positive rescaling so that equivalent constraints compare equal.
void normalize(Inequality& q) {
  std::size_t lead = 0;
  while (lead < q.a.size() && q.a[lead].is_zero()) ++lead;
  if (lead == q.a.size()) return;
  const Scalar& pivot = q.a[lead];
  const TablePtr& table = pivot.table();
  Scalar factor;
  if (pivot.is_rational() || !table || table->mode() != ScalarMode::Transcendental) {
    factor = invert(pivot);
    if (sign(pivot) < 0) factor = -factor;
  } else {
    // Transcendental coefficients: clear denominators with their signs, then divide by the rational content.
    factor = Scalar(1);
    std::vector<Polynomial> seen;
    const auto visit = [&](const Scalar& x) {
      if (x.is_polynomial()) return;
      if (std::find(seen.begin(), seen.end(), x.denominator()) != seen.end()) return;
      seen.push_back(x.denominator());
      const Scalar d = Scalar::fraction(table, x.denominator(), Polynomial(Rational(1)));
      factor *= sign(d) > 0 ? d : -d;
    };
    for (const auto& x : q.a) visit(x);
    visit(q.c);
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    const auto content = [&](const Scalar& x) {
      for (const auto& [m, coef] : (x * factor).numerator().terms()) {
        num_gcd = gcd(num_gcd, coef.get_num());
        den_lcm = lcm(den_lcm, coef.get_den());
      }
    };
    for (const auto& x : q.a) content(x);
    content(q.c);
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    factor *= Scalar(scale);
  }
  if (factor == Scalar(1)) return;
  for (auto& x : q.a) {
    if (!x.is_zero()) x *= factor;
  }
  q.c *= factor;
}

bool is_constant(const Inequality& q) { return is_zero_vector(q.a); }

bool constant_holds(const Inequality& q) {
  const int s = sign(q.c);
  return q.strict ? s > 0 : s >= 0;
}

// Normalizes, drops trivially true constraints and dominated duplicates.
// Returns false when a constant constraint is violated.
bool prune(std::vector<Inequality>& list) {
  std::vector<Inequality> kept;
  for (auto& q : list) {
    if (is_constant(q)) {
      if (!constant_holds(q)) return false;
      continue;
    }
    normalize(q);
    bool absorbed = false;
    for (auto& k : kept) {
      if (k.a != q.a) continue;
      const int cmp = compare(q.c, k.c);
      if (cmp < 0 || (cmp == 0 && q.strict && !k.strict)) k = q;
      absorbed = true;
      break;
    }
    if (!absorbed) kept.push_back(std::move(q));
  }
  list = std::move(kept);
  return true;
}

Scalar pick_value(const std::optional<Scalar>& lo, bool lo_strict, const std::optional<Scalar>& hi, bool hi_strict) {
  if (lo && hi) {
    const int cmp = compare(*lo, *hi);
    if (cmp == 0) {
      if (lo_strict || hi_strict) fail(ErrorCode::InternalInconsistency, "empty interval during back-substitution");
      return *lo;
    }
    if (cmp > 0) fail(ErrorCode::InternalInconsistency, "crossed bounds during back-substitution");
    return Scalar(rational_between(*lo, *hi));
  }
  if (lo) return lo->is_rational() ? *lo + Scalar(1) : Scalar(rational_above(*lo));
  if (hi) return hi->is_rational() ? *hi - Scalar(1) : Scalar(rational_below(*hi));
  return Scalar(0);
}

}  // namespace

FeasibilityResult fm_feasible(const LinearSystem& system) {
  check_shape(system);
  const std::size_t n = system.variables;

  std::vector<AffineForm> equalities = system.equalities;
  std::vector<Inequality> current;
  for (const auto& f : system.weak) current.push_back({f.coeffs, f.constant, false});
  for (const auto& f : system.strict) current.push_back({f.coeffs, f.constant, true});

  // Equalities first, by substitution.
  std::vector<Substitution> substitutions;
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    const AffineForm eq = equalities[e];
    std::size_t j = 0;
    while (j < n && eq.coeffs[j].is_zero()) ++j;
    if (j == n) {
      if (!eq.constant.is_zero()) return {};
      continue;
    }
    const Scalar inv = invert(eq.coeffs[j]);
    Substitution sub{j, Vector(n), -(eq.constant * inv)};
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j && !eq.coeffs[k].is_zero()) sub.coeffs[k] = -(eq.coeffs[k] * inv);
    }
    const auto eliminate = [&](Vector& a, Scalar& c) {
      if (a[j].is_zero()) return;
      const Scalar f = a[j] * inv;
      for (std::size_t k = 0; k < n; ++k) {
        if (!eq.coeffs[k].is_zero()) a[k] -= f * eq.coeffs[k];
      }
      a[j] = Scalar();
      c -= f * eq.constant;
    };
    for (std::size_t later = e + 1; later < equalities.size(); ++later) {
      eliminate(equalities[later].coeffs, equalities[later].constant);
    }
    for (auto& q : current) eliminate(q.a, q.c);
    substitutions.push_back(std::move(sub));
  }

  if (!prune(current)) return {};

  std::vector<Elimination> eliminations;
  for (;;) {
    std::size_t best = n;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const auto& q : current) {
        if (q.a[k].is_zero()) continue;
        (sign(q.a[k]) > 0 ? pos : neg) += 1;
      }
      if (pos + neg == 0) continue;
      if (pos * neg < best_cost) {
        best_cost = pos * neg;
        best = k;
      }
    }
    if (best == n) break;

    Elimination record{best, {}};
    std::vector<Inequality> lower;
    std::vector<Inequality> upper;
    std::vector<Inequality> next;
    for (auto& q : current) {
      if (q.a[best].is_zero()) {
        next.push_back(std::move(q));
        continue;
      }
      record.constraints.push_back(q);
      (sign(q.a[best]) > 0 ? lower : upper).push_back(std::move(q));
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Scalar wl = -up.a[best];
        const Scalar wu = lo.a[best];
        Inequality combined{Vector(n), wl * lo.c + wu * up.c, lo.strict || up.strict};
        for (std::size_t k = 0; k < n; ++k) {
          if (k == best) continue;
          if (lo.a[k].is_zero() && up.a[k].is_zero()) continue;
          combined.a[k] = wl * lo.a[k] + wu * up.a[k];
        }
        next.push_back(std::move(combined));
      }
    }
    eliminations.push_back(std::move(record));
    current = std::move(next);
    if (!prune(current)) return {};
  }

  Vector x(n);
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    const std::size_t k = it->var;
    std::optional<Scalar> lo;
    std::optional<Scalar> hi;
    bool lo_strict = false;
    bool hi_strict = false;
    for (const auto& q : it->constraints) {
      Scalar rest = q.c;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && !q.a[j].is_zero() && !x[j].is_zero()) rest += q.a[j] * x[j];
      }
      const Scalar bound = -rest / q.a[k];
      if (sign(q.a[k]) > 0) {
        const int cmp = lo ? compare(bound, *lo) : 1;
        if (cmp > 0) {
          lo = bound;
          lo_strict = q.strict;
        } else if (cmp == 0) {
          lo_strict = lo_strict || q.strict;
        }
      } else {
        const int cmp = hi ? compare(bound, *hi) : -1;
        if (cmp < 0) {
          hi = bound;
          hi_strict = q.strict;
        } else if (cmp == 0) {
          hi_strict = hi_strict || q.strict;
        }
      }
    }
    x[k] = pick_value(lo, lo_strict, hi, hi_strict);
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    x[it->var] = dot(it->coeffs, x) + it->constant;
  }

  if (!satisfies(system, x)) fail(ErrorCode::InternalInconsistency, "Fourier-Motzkin witness fails verification");
  return {true, std::move(x)};
}

}  // namespace fanforge
