#pragma once

#include "fanforge/linalg.hpp"

#include <vector>

namespace fanforge {

// Ordered vectors v_1..v_n spanning a d-dimensional space; the last
// ghost_count of them are ghosts. Public indices are 1-based.
class VectorConfiguration {
 public:
  VectorConfiguration(std::size_t dimension, std::vector<Vector> vectors, std::size_t ghost_count);

  std::size_t dimension() const { return d_; }
  std::size_t size() const { return vectors_.size(); }
  std::size_t ghost_count() const { return ghosts_; }
  std::size_t non_ghost_count() const { return vectors_.size() - ghosts_; }
  bool is_ghost(std::size_t index) const;
  const Vector& vector(std::size_t index) const;
  const std::vector<Vector>& vectors() const { return vectors_; }
  TablePtr table() const;

  // d x n coordinate matrix.
  Matrix matrix() const;
  Vector sum() const;
  // Balanced (sum zero) and odd (n - d = 2m + 1 with m >= 1).
  bool is_normalized() const;
  std::size_t m() const;

  VectorConfiguration transformed(const Matrix& a) const;

 private:
  std::size_t d_;
  std::vector<Vector> vectors_;
  std::size_t ghosts_;
};

Subspace relation_space(const VectorConfiguration& v);

struct RationalityMeasures {
  std::size_t b = 0;
  std::size_t c = 0;
};

RationalityMeasures rationality_measures(const VectorConfiguration& v);

// Appends ghosts: -sum if nonzero, then 0 if n - d is even, then 0, 0 if n - d = 1.
VectorConfiguration normalize_configuration(const VectorConfiguration& v);

struct QuasilatticeInfo {
  std::size_t generator_count = 0;
  std::size_t rank = 0;
  bool is_lattice = false;
};

QuasilatticeInfo quasilattice_info(const VectorConfiguration& v);

}  // namespace fanforge
