#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "fanforge/error.hpp"
#include "fanforge/fourier_motzkin.hpp"
#include "fanforge/linalg.hpp"

#include <random>

using namespace fanforge;
using fanforge::testing::Q;
using fanforge::testing::S;

namespace {

Vector V(const TablePtr& t, std::initializer_list<const char*> entries) {
  Vector out;
  for (const char* e : entries) out.push_back(S(t, e));
  return out;
}

std::vector<Rational> QV(std::initializer_list<long> entries) {
  std::vector<Rational> out;
  for (long e : entries) out.push_back(Rational(e));
  return out;
}

Matrix random_sqrt2_matrix(std::mt19937_64& rng, const TablePtr& t, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> shape(0, 3);
  Matrix m(rows, cols);
  const Scalar s = Scalar::symbol(t, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(small(rng)) + Scalar(small(rng)) * s;
  }
  // Force dependencies in some instances so that rank deficiency is exercised.
  if (rows >= 2 && shape(rng) == 0) {
    const Scalar f = Scalar(small(rng)) + s;
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = f * m(0, c);
  }
  if (rows >= 3 && shape(rng) == 1) {
    for (std::size_t c = 0; c < cols; ++c) m(rows - 2, c) = m(0, c) - s * m(1, c);
  }
  return m;
}

}  // namespace

TEST_CASE("rank depends on the scalar mode") {
  auto alg = testing::sqrt_table();
  Matrix a = Matrix::from_rows({V(alg, {"s", "1"}), V(alg, {"2", "s"})});
  CHECK(rank(a) == 1);
  CHECK(rank_fraction_free(a) == 1);

  auto tr = testing::transcendental_table({{"s", Q(14142, 10000)}});
  Matrix b = Matrix::from_rows({V(tr, {"s", "1"}), V(tr, {"2", "s"})});
  CHECK(rank(b) == 2);
  CHECK(rank_by_division(b) == 2);

  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 3)) == 0);
}

TEST_CASE("kernel_basis examples") {
  auto t = testing::sqrt_table();
  Matrix a = Matrix::from_rows({Vector{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}});
  Subspace k = kernel_basis(a);
  CHECK(k.dim() == 3);
  CHECK(k.contains(Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(k.contains(Vector{Scalar(0), Scalar(0), Scalar(1), Scalar(0)}));
  CHECK(k.contains(Vector{Scalar(0), Scalar(0), Scalar(0), Scalar(1)}));

  Matrix b = Matrix::from_rows({V(t, {"s", "-1", "1 - s", "0"})});
  Subspace kb = kernel_basis(b);
  CHECK(kb.dim() == 3);
  CHECK(kb.contains(V(t, {"1", "1", "1", "0"})));
  CHECK(kb.contains(V(t, {"0", "0", "0", "1"})));
  CHECK(kb.contains(V(t, {"1", "s", "0", "0"})));
  CHECK_FALSE(kb.contains(V(t, {"1", "0", "0", "0"})));

  CHECK(kernel_basis(Matrix::from_rows({V(t, {"1", "s"}), V(t, {"0", "1"})})).dim() == 0);
}

TEST_CASE("kernel over a transcendental table is polynomial") {
  auto t = testing::transcendental_table({{"t", Q(314159, 100000)}});
  Matrix a = Matrix::from_rows({V(t, {"t", "t^2 + 1", "1"})});
  Subspace k = kernel_basis(a);
  REQUIRE(k.dim() == 2);
  for (const auto& v : k.basis()) {
    for (const auto& x : v) CHECK(x.is_polynomial());
    CHECK(dot(a.row(0), v).is_zero());
  }
}

TEST_CASE("solve") {
  auto t = testing::sqrt_table();
  Matrix a = Matrix::from_rows({V(t, {"1", "s"}), V(t, {"s", "1"})});
  auto x = solve(a, V(t, {"1", "0"}));
  REQUIRE(x);
  CHECK(a * *x == V(t, {"1", "0"}));
  Matrix singular = Matrix::from_rows({V(t, {"1", "s"}), V(t, {"s", "2"})});
  CHECK_FALSE(solve(singular, V(t, {"1", "0"})));
  CHECK(solve(singular, V(t, {"1", "s"})));
}

TEST_CASE("rational_bounds examples") {
  auto t = testing::sqrt_table();
  Matrix v = Matrix::from_rows({V(t, {"s", "-1", "1 - s", "0"})});
  RationalBounds rb = rational_bounds(kernel_basis(v));
  CHECK(rb.b == 2);
  CHECK(rb.c == 4);
  // Oracle: splitting s*x1 - x2 + x3 - s*x3 = 0 gives x3 = x2 and x1 = x3.
  CHECK(rb.inner == q_span(4, {QV({1, 1, 1, 0}), QV({0, 0, 0, 1})}));

  Subspace line = Subspace::span(2, {V(t, {"1", "s"})});
  RationalBounds lb = rational_bounds(line);
  CHECK(lb.b == 0);
  CHECK(lb.c == 2);

  Subspace rational = kernel_basis(Matrix::from_rows({Vector{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}}));
  RationalBounds qb = rational_bounds(rational);
  CHECK(qb.b == 3);
  CHECK(qb.c == 3);
  CHECK(qb.inner == qb.outer);

  RationalBounds zero = rational_bounds(Subspace(3));
  CHECK(zero.b == 0);
  CHECK(zero.c == 0);
}

TEST_CASE("rational_bounds is independent of the chosen basis") {
  auto t = testing::sqrt_table();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix a = random_sqrt2_matrix(rng, t, 2, 5);
    Subspace w = kernel_basis(a);
    RationalBounds base = rational_bounds(w);
    CHECK(base.b <= w.dim());
    CHECK(w.dim() <= base.c);
    // Inner vectors lie in W; W lies in the outer span.
    for (const auto& q : base.inner.basis) {
      Vector v;
      for (const auto& x : q) v.push_back(Scalar(x));
      CHECK(w.contains(v));
    }
    // A different basis: mix the canonical vectors with symbolic coefficients.
    std::vector<Vector> mixed = w.basis();
    const Scalar s = Scalar::symbol(t, 0);
    for (std::size_t i = 0; i + 1 < mixed.size(); ++i) {
      const Scalar f = Scalar(small(rng)) + s;
      for (std::size_t j = 0; j < mixed[i].size(); ++j) mixed[i][j] += f * mixed[i + 1][j];
    }
    for (auto& vec : mixed) {
      for (auto& x : vec) x *= (Scalar(3) + s);
    }
    // Keep the scrambled basis as given: rational_bounds must not depend on it.
    Subspace again = Subspace::span(5, mixed);
    CHECK(again == w);
    RationalBounds other = rational_bounds(again);
    CHECK(other.b == base.b);
    CHECK(other.c == base.c);
    CHECK(other.inner == base.inner);
    CHECK(other.outer == base.outer);
  }
}

TEST_CASE("rank plus nullity and elimination agreement") {
  auto t = testing::sqrt_table();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = dim(rng);
    const std::size_t c = dim(rng);
    Matrix a = random_sqrt2_matrix(rng, t, r, c);
    const std::size_t rk = rank(a);
    CHECK(rk + kernel_basis(a).dim() == c);
    CHECK(rank_fraction_free(a) == rank_by_division(a));
    CHECK(rank(a.transpose()) == rk);
  }
}

TEST_CASE("Fourier-Motzkin basics") {
  LinearSystem s;
  s.variables = 1;
  s.add_strict().coeffs = {Scalar(1)};
  {
    AffineForm& f = s.add_strict();
    f.coeffs = {Scalar(-1)};
    f.constant = Scalar(1);
  }
  auto r = fm_feasible(s);
  REQUIRE(r.feasible);
  CHECK(r.witness[0] == Scalar(Q(1, 2)));

  LinearSystem bad;
  bad.variables = 1;
  bad.add_strict().coeffs = {Scalar(1)};
  bad.add_strict().coeffs = {Scalar(-1)};
  CHECK_FALSE(fm_feasible(bad).feasible);

  // x >= 0 and -x >= 0 pins x = 0; strictness must be tracked.
  LinearSystem pinned;
  pinned.variables = 1;
  pinned.add_weak().coeffs = {Scalar(1)};
  pinned.add_weak().coeffs = {Scalar(-1)};
  auto p = fm_feasible(pinned);
  REQUIRE(p.feasible);
  CHECK(p.witness[0].is_zero());
}

TEST_CASE("Fourier-Motzkin with equalities and irrational bounds") {
  auto t = testing::sqrt_table();
  // x + y = s, x - y > 0, y > 1/2: feasible since s > 1.
  LinearSystem sys;
  sys.variables = 2;
  {
    AffineForm& e = sys.add_equality();
    e.coeffs = V(t, {"1", "1"});
    e.constant = S(t, "-s");
    AffineForm& a = sys.add_strict();
    a.coeffs = V(t, {"1", "-1"});
    AffineForm& b = sys.add_strict();
    b.coeffs = V(t, {"0", "1"});
    b.constant = S(t, "-1/2");
  }
  auto r = fm_feasible(sys);
  REQUIRE(r.feasible);
  CHECK(satisfies(sys, r.witness));

  // x > s and x < 1415/1000: a thin irrational interval.
  LinearSystem thin;
  thin.variables = 1;
  {
    AffineForm& a = thin.add_strict();
    a.coeffs = {Scalar(1)};
    a.constant = S(t, "-s");
    AffineForm& b = thin.add_strict();
    b.coeffs = {Scalar(-1)};
    b.constant = Scalar(Q(1415, 1000));
  }
  auto w = fm_feasible(thin);
  REQUIRE(w.feasible);
  CHECK(w.witness[0].is_rational());

  // x > s and x < 1414/1000 is empty.
  thin.strict[1].constant = Scalar(Q(1414, 1000));
  CHECK_FALSE(fm_feasible(thin).feasible);
}

TEST_CASE("Fourier-Motzkin agrees with the planar grid oracle") {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto cs = testing::random_planar_system(rng);
    const auto r = fm_feasible(testing::to_system(cs));
    CHECK(r.feasible == testing::grid_feasible(cs));
    feasible += r.feasible ? 1 : 0;
  }
  CHECK(feasible > 10);
  CHECK(feasible < 110);
}
