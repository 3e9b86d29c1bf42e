#include "fanforge/configuration.hpp"

#include "fanforge/error.hpp"

#include <set>

namespace fanforge {

VectorConfiguration::VectorConfiguration(std::size_t dimension, std::vector<Vector> vectors, std::size_t ghost_count)
    : d_(dimension), vectors_(std::move(vectors)), ghosts_(ghost_count) {
  if (d_ == 0) fail(ErrorCode::InvalidConfiguration, "dimension must be positive");
  if (ghosts_ > vectors_.size()) fail(ErrorCode::InvalidConfiguration, "more ghosts than vectors");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != d_) {
      fail(ErrorCode::DimensionMismatch, "vector " + std::to_string(i + 1) + " has " + std::to_string(vectors_[i].size()) +
                                             " coordinates, expected " + std::to_string(d_));
    }
    if (i < non_ghost_count() && is_zero_vector(vectors_[i])) {
      fail(ErrorCode::InvalidConfiguration, "vector " + std::to_string(i + 1) + " is zero but not a ghost");
    }
  }
  table();
  if (vectors_.empty() || rank(matrix()) != d_) fail(ErrorCode::NotSpanning, "the vectors do not span the ambient space");
}

bool VectorConfiguration::is_ghost(std::size_t index) const {
  if (index == 0 || index > size()) fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(index));
  return index > non_ghost_count();
}

const Vector& VectorConfiguration::vector(std::size_t index) const {
  if (index == 0 || index > size()) fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(index));
  return vectors_[index - 1];
}

TablePtr VectorConfiguration::table() const {
  TablePtr t;
  for (const auto& v : vectors_) {
    for (const auto& x : v) t = merge_tables(t, x.table());
  }
  return t;
}

Matrix VectorConfiguration::matrix() const { return Matrix::from_columns(vectors_, d_); }

Vector VectorConfiguration::sum() const {
  Vector s(d_);
  for (const auto& v : vectors_) {
    for (std::size_t k = 0; k < d_; ++k) s[k] += v[k];
  }
  return s;
}

bool VectorConfiguration::is_normalized() const {
  const std::size_t n = size();
  return n >= d_ + 3 && (n - d_) % 2 == 1 && is_zero_vector(sum());
}

std::size_t VectorConfiguration::m() const {
  if (!is_normalized()) fail(ErrorCode::NotNormalized, "configuration is not balanced and odd");
  return (size() - d_ - 1) / 2;
}

VectorConfiguration VectorConfiguration::transformed(const Matrix& a) const {
  std::vector<Vector> out;
  for (const auto& v : vectors_) out.push_back(a * v);
  return VectorConfiguration(d_, std::move(out), ghosts_);
}

Subspace relation_space(const VectorConfiguration& v) { return kernel_basis(v.matrix()); }

RationalityMeasures rationality_measures(const VectorConfiguration& v) {
  const RationalBounds rb = rational_bounds(relation_space(v));
  const std::size_t n = v.size();
  const std::size_t rel = n - v.dimension();
  if (!(rb.b <= rel && rel <= rb.c && rb.c <= n)) {
    fail(ErrorCode::InternalInconsistency, "rationality measures violate b <= n-d <= c <= n");
  }
  if (rb.b < rel && rb.c < rb.b + 2) {
    fail(ErrorCode::InternalInconsistency, "irrational configuration with c < b + 2");
  }
  return {rb.b, rb.c};
}

VectorConfiguration normalize_configuration(const VectorConfiguration& v) {
  const std::size_t d = v.dimension();
  std::vector<Vector> vectors = v.vectors();
  std::size_t ghosts = v.ghost_count();
  const Vector zero(d);
  const Vector total = v.sum();
  if (!is_zero_vector(total)) {
    Vector neg;
    for (const auto& x : total) neg.push_back(-x);
    vectors.push_back(std::move(neg));
    ++ghosts;
  }
  if ((vectors.size() - d) % 2 == 0) {
    vectors.push_back(zero);
    ++ghosts;
  }
  if (vectors.size() - d == 1) {
    vectors.push_back(zero);
    vectors.push_back(zero);
    ghosts += 2;
  }
  VectorConfiguration out(d, std::move(vectors), ghosts);
  if (!out.is_normalized()) fail(ErrorCode::InternalInconsistency, "normalization did not produce a balanced odd configuration");
  if (quasilattice_info(out).rank != quasilattice_info(v).rank) {
    fail(ErrorCode::InternalInconsistency, "normalization changed the quasilattice");
  }
  return out;
}

QuasilatticeInfo quasilattice_info(const VectorConfiguration& v) {
  const std::size_t d = v.dimension();
  std::set<Monomial> monomials;
  std::vector<std::vector<std::map<Monomial, Rational>>> parts;
  for (const auto& vec : v.vectors()) {
    std::vector<std::map<Monomial, Rational>> coords;
    for (const auto& x : vec) {
      coords.push_back(rational_components(x));
      for (const auto& [m, c] : coords.back()) monomials.insert(m);
    }
    parts.push_back(std::move(coords));
  }
  const std::vector<Monomial> order(monomials.begin(), monomials.end());
  std::vector<std::vector<Rational>> rows;
  for (const auto& coords : parts) {
    std::vector<Rational> row(d * order.size(), Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        auto it = coords[k].find(order[j]);
        if (it != coords[k].end()) row[k * order.size() + j] = it->second;
      }
    }
    rows.push_back(std::move(row));
  }
  QuasilatticeInfo info;
  info.generator_count = v.size();
  info.rank = q_span(d * order.size(), rows).dim();
  info.is_lattice = info.rank == d;
  return info;
}

}  // namespace fanforge
