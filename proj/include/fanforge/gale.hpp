#pragma once

#include "fanforge/fan.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanforge {

// n x (2m+1) matrix M whose columns form a basis of Rel(V), first column all ones.
// Row j is the dual vector; dropping its first entry gives the point lambda_R(j).
class GaleDual {
 public:
  static GaleDual from_matrix(const VectorConfiguration& v, Matrix m);

  const VectorConfiguration& configuration() const { return config_; }
  const Matrix& matrix() const { return m_; }
  std::size_t m() const { return (m_.cols() - 1) / 2; }
  std::size_t size() const { return m_.rows(); }

  // 1-based accessors.
  Vector lambda_hat(std::size_t j) const;
  Vector lambda_real(std::size_t j) const;
  // Pairs (re_t, im_t) = (a^t, a^{m+t}) for t = 1..m.
  std::vector<std::pair<Scalar, Scalar>> lambda_complex(std::size_t j) const;

  std::vector<Vector> lambda_hat_all() const;
  std::vector<Vector> lambda_real_all() const;

 private:
  GaleDual(VectorConfiguration v, Matrix m) : config_(std::move(v)), m_(std::move(m)) {}

  VectorConfiguration config_;
  Matrix m_;
};

GaleDual compute_gale_dual(const VectorConfiguration& v);
bool validate_gale_dual(const Matrix& m, const VectorConfiguration& v);

// M' = M * [[1, B], [0, A]].
struct GaleTransition {
  Vector b;
  Matrix a;
};

GaleTransition gale_transition(const GaleDual& from, const GaleDual& to);

// Interleaves lambda_complex back into a point of R^{2m}.
Vector lambda_real_from_complex(const std::vector<std::pair<Scalar, Scalar>>& c);

// Is nu in the interior of conv{lambda_R(j) : j in indices}, a full-dimensional simplex?
bool in_open_simplex(const GaleDual& g, const IndexSet& indices, const Vector& nu);

// True when nu lies on an affine hyperplane spanned by points of lambda_R.
bool on_arrangement(const GaleDual& g, const Vector& nu);

Triangulation induced_triangulation(const GaleDual& g, const Vector& nu);

BosioReport bosio_conditions(const Triangulation& t, const GaleDual& g);

struct RegularityResult {
  bool regular = false;
  Vector omega;  // empty when not regular
};

// Linear form phi_alpha on the maximal cone E_alpha with phi_alpha(v_i) = omega_i.
Vector cone_linear_form(const Triangulation& t, std::size_t alpha, const Vector& omega);

// For normalized configurations the witness is chosen so that its Lee point avoids the line arrangement.
RegularityResult regularity_witness(const Triangulation& t);
// Checks the strict height-function inequalities and pairwise distinct forms.
bool verify_height_function(const Triangulation& t, const Vector& omega);

Vector lee_point(const GaleDual& g, const Vector& omega);

struct Chamber2D {
  std::vector<Vector> vertex_cycle;  // counterclockwise
  Vector interior_point;
  std::optional<std::vector<IndexSet>> triangulation;
  std::string triangulation_error;
};

struct LineArrangement {
  std::vector<Vector> points;                           // distinct lambda_R points
  std::vector<std::pair<Vector, Vector>> line_points;   // two points on each line
  std::vector<std::array<Scalar, 3>> lines;             // a x + b y = c, normalized
};

LineArrangement line_arrangement(const GaleDual& g);
std::vector<Chamber2D> enumerate_chambers_2d(const GaleDual& g);

std::vector<Vector> lvm_embedding_coefficients(const GaleDual& g, const Vector& nu);
// Does sum_j t_j (lambda_R(j) - nu) = 0 admit t > 0?
bool embedding_has_positive_solution(const GaleDual& g, const Vector& nu);

}  // namespace fanforge
