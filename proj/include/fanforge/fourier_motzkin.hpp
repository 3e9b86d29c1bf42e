#pragma once

#include "fanforge/scalar.hpp"

#include <vector>

namespace fanforge {

// coeffs . x + constant
struct AffineForm {
  Vector coeffs;
  Scalar constant;

  Scalar evaluate(const Vector& x) const;
};

// equalities: form = 0, weak: form >= 0, strict: form > 0.
struct LinearSystem {
  std::size_t variables = 0;
  std::vector<AffineForm> equalities;
  std::vector<AffineForm> weak;
  std::vector<AffineForm> strict;

  AffineForm& add_equality() { return push(equalities); }
  AffineForm& add_weak() { return push(weak); }
  AffineForm& add_strict() { return push(strict); }

 private:
  AffineForm& push(std::vector<AffineForm>& list) {
    list.push_back(AffineForm{Vector(variables), Scalar()});
    return list.back();
  }
};

struct FeasibilityResult {
  bool feasible = false;
  Vector witness;  // empty when infeasible
};

// Exact Fourier-Motzkin elimination with strictness tracking. A feasible
// result carries a witness that has been checked against every constraint.
FeasibilityResult fm_feasible(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const Vector& x);

}  // namespace fanforge
