#include "fanforge/linalg.hpp"

#include "fanforge/error.hpp"

#include <algorithm>

namespace fanforge {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) fail(ErrorCode::DimensionMismatch, "cannot infer the column count of an empty row list");
  return from_rows(rows, rows.front().size());
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::DimensionMismatch, "column " + std::to_string(c) + " has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

TablePtr Matrix::table() const {
  TablePtr t;
  for (const auto& x : data_) t = merge_tables(t, x.table());
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shapes disagree");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shapes disagree");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !x[k].is_zero()) out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot product of vectors of different lengths");
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

namespace {

bool transcendental(const TablePtr& t) { return t && t->mode() == ScalarMode::Transcendental; }

void subtract_multiple(Vector& target, const Scalar& factor, const Vector& source, std::size_t from) {
  for (std::size_t j = from; j < target.size(); ++j) {
    if (!source[j].is_zero()) target[j] -= factor * source[j];
  }
}

std::optional<std::size_t> find_pivot(const std::vector<Vector>& rows, std::size_t start, std::size_t col) {
  for (std::size_t i = start; i < rows.size(); ++i) {
    if (!rows[i][col].is_zero()) return i;
  }
  return std::nullopt;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  return transcendental(a.table()) ? rank_fraction_free(a) : rank_by_division(a);
}

std::size_t rank_by_division(const Matrix& a) {
  auto rows = a.row_list();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
    const auto p = find_pivot(rows, r, c);
    if (!p) continue;
    std::swap(rows[*p], rows[r]);
    const Scalar inv = invert(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      subtract_multiple(rows[i], rows[i][c] * inv, rows[r], c);
    }
    ++r;
  }
  return r;
}

std::size_t rank_fraction_free(const Matrix& a) {
  auto rows = a.row_list();
  for (auto& row : rows) row = clear_denominators(row);
  Scalar previous(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
    const auto p = find_pivot(rows, r, c);
    if (!p) continue;
    std::swap(rows[*p], rows[r]);
    const Scalar pivot = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Scalar lead = rows[i][c];
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        rows[i][j] = (pivot * rows[i][j] - lead * rows[r][j]) / previous;
      }
      rows[i][c] = Scalar();
    }
    previous = pivot;
    ++r;
  }
  return r;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
  auto rows = a.row_list();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
    const auto p = find_pivot(rows, r, c);
    if (!p) continue;
    std::swap(rows[*p], rows[r]);
    const Scalar inv = invert(rows[r][c]);
    for (std::size_t j = c; j < a.cols(); ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      subtract_multiple(rows[i], Scalar(rows[i][c]), rows[r], c);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivots) *pivots = pivot_cols;
  return Matrix::from_rows(rows, a.cols());
}

Vector clear_denominators(const Vector& v) {
  if (is_zero_vector(v)) return v;
  TablePtr table;
  for (const auto& x : v) table = merge_tables(table, x.table());
  Vector out = v;
  std::vector<Polynomial> seen;
  for (const auto& x : v) {
    if (x.is_polynomial()) continue;
    if (std::find(seen.begin(), seen.end(), x.denominator()) == seen.end()) seen.push_back(x.denominator());
  }
  for (const auto& d : seen) {
    const Scalar factor = Scalar::fraction(table, d, Polynomial(Rational(1)));
    for (auto& x : out) x *= factor;
  }
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : out) {
    for (const auto& [m, c] : x.numerator().terms()) {
      num_gcd = gcd(num_gcd, c.get_num());
      den_lcm = lcm(den_lcm, c.get_den());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (const auto& x : out) {
    if (x.is_zero()) continue;
    if (x.numerator().leading_term().second < 0) scale = -scale;
    break;
  }
  if (scale != 1) {
    for (auto& x : out) x *= Scalar(scale);
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(Matrix::from_rows(vectors, ambient_dim), &pivots);
  const bool clear = transcendental(reduced.table());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    s.basis_.push_back(clear ? clear_denominators(reduced.row(i)) : reduced.row(i));
  }
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "vector length differs from the ambient dimension");
  Vector residual = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    if (residual[p].is_zero()) continue;
    subtract_multiple(residual, residual[p] / b[p], b, 0);
  }
  return is_zero_vector(residual);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Subspace kernel_basis(const Matrix& a) {
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(a, &pivots);
  std::vector<Vector> vectors;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    Vector x(a.cols());
    x[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -reduced(i, f);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(a.cols(), vectors);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length differs from the row count");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(augmented, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduced(i, a.cols());
  return x;
}

namespace {

using QRow = std::vector<Rational>;

std::vector<QRow> q_rref(std::vector<QRow> rows, std::size_t ambient, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < ambient; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ambient; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

bool QSubspace::contains(const std::vector<Rational>& v) const {
  QRow residual = v;
  for (const auto& b : basis) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (residual[p] == 0) continue;
    const Rational f = residual[p];
    for (std::size_t j = 0; j < ambient; ++j) residual[j] -= f * b[j];
  }
  return std::all_of(residual.begin(), residual.end(), [](const Rational& x) { return x == 0; });
}

QSubspace q_span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) fail(ErrorCode::DimensionMismatch, "rational vector length differs from the ambient dimension");
  }
  return QSubspace{ambient, q_rref(vectors, ambient, nullptr)};
}

QSubspace q_kernel(std::size_t ambient, const std::vector<std::vector<Rational>>& equations) {
  std::vector<std::size_t> pivots;
  const auto reduced = q_rref(equations, ambient, &pivots);
  std::vector<QRow> vectors;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < ambient; ++f) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    QRow x(ambient, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -reduced[i][f];
    vectors.push_back(std::move(x));
  }
  return q_span(ambient, vectors);
}

std::map<Monomial, std::vector<Rational>> vector_components(const Vector& v) {
  std::map<Monomial, std::vector<Rational>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& [m, c] : rational_components(v[i])) {
      auto& slot = out[m];
      if (slot.empty()) slot.assign(v.size(), Rational(0));
      slot[i] = c;
    }
  }
  return out;
}

RationalBounds rational_bounds(const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  RationalBounds out;

  std::vector<QRow> components;
  for (const auto& v : w.basis()) {
    for (auto& [m, comp] : vector_components(v)) components.push_back(std::move(comp));
  }
  out.outer = q_span(n, components);

  std::vector<Vector> equations;
  if (w.dim() == 0) {
    equations = Matrix::identity(n).row_list();
  } else {
    equations = kernel_basis(Matrix::from_rows(w.basis(), n)).basis();
  }
  std::vector<QRow> split;
  for (const auto& y : equations) {
    for (auto& [m, comp] : vector_components(y)) split.push_back(std::move(comp));
  }
  out.inner = q_kernel(n, split);

  out.b = out.inner.dim();
  out.c = out.outer.dim();
  if (out.b > w.dim() || w.dim() > out.c) {
    fail(ErrorCode::InternalInconsistency, "rational bounds violate b <= dim W <= c");
  }
  return out;
}

}  // namespace fanforge
