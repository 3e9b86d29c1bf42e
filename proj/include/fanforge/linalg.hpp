#pragma once

#include "fanforge/scalar.hpp"

#include <optional>
#include <vector>

namespace fanforge {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;
  Matrix transpose() const;
  TablePtr table() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar dot(const Vector& a, const Vector& b);
bool is_zero_vector(const Vector& v);

// Rank over the scalar field. Dispatches on the table mode: fraction-free
// (Bareiss) in transcendental mode, pivot inversion otherwise.
std::size_t rank(const Matrix& a);
std::size_t rank_fraction_free(const Matrix& a);
std::size_t rank_by_division(const Matrix& a);

// Reduced row echelon form with leading ones; pivots receives pivot columns.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);

// Multiply by a common denominator and strip the rational content so that
// entries are polynomials with coprime integer coefficients and the first
// nonzero entry has a positive leading coefficient.
Vector clear_denominators(const Vector& v);

// Linear subspace of K^n in canonical echelon form (leading ones over an
// algebraic or rational table, content-normalized polynomial rows over a
// transcendental one).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

Subspace kernel_basis(const Matrix& a);

// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Subspace of Q^n in reduced row echelon form.
struct QSubspace {
  std::size_t ambient = 0;
  std::vector<std::vector<Rational>> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const std::vector<Rational>& v) const;
  friend bool operator==(const QSubspace& a, const QSubspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

QSubspace q_span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);
QSubspace q_kernel(std::size_t ambient, const std::vector<std::vector<Rational>>& equations);

// Per-monomial rational components of a polynomial vector.
std::map<Monomial, std::vector<Rational>> vector_components(const Vector& v);

struct RationalBounds {
  std::size_t b = 0;
  QSubspace inner;  // largest rational subspace inside W
  std::size_t c = 0;
  QSubspace outer;  // smallest rational subspace containing W
};

RationalBounds rational_bounds(const Subspace& w);

}  // namespace fanforge
