#include "fanforge/gale.hpp"

#include "fanforge/combinations.hpp"
#include "fanforge/error.hpp"
#include "fanforge/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace fanforge {

GaleDual GaleDual::from_matrix(const VectorConfiguration& v, Matrix m) {
  if (!validate_gale_dual(m, v)) fail(ErrorCode::InvalidGaleDual, "matrix is not a Gale dual of the configuration");
  return GaleDual(v, std::move(m));
}

Vector GaleDual::lambda_hat(std::size_t j) const {
  if (j == 0 || j > size()) fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(j));
  return m_.row(j - 1);
}

Vector GaleDual::lambda_real(std::size_t j) const {
  Vector row = lambda_hat(j);
  return Vector(row.begin() + 1, row.end());
}

std::vector<std::pair<Scalar, Scalar>> GaleDual::lambda_complex(std::size_t j) const {
  const Vector a = lambda_real(j);
  std::vector<std::pair<Scalar, Scalar>> out;
  for (std::size_t t = 0; t < m(); ++t) out.emplace_back(a[t], a[m() + t]);
  return out;
}

std::vector<Vector> GaleDual::lambda_hat_all() const { return m_.row_list(); }

std::vector<Vector> GaleDual::lambda_real_all() const {
  std::vector<Vector> out;
  for (std::size_t j = 1; j <= size(); ++j) out.push_back(lambda_real(j));
  return out;
}

Vector lambda_real_from_complex(const std::vector<std::pair<Scalar, Scalar>>& c) {
  Vector out(2 * c.size());
  for (std::size_t t = 0; t < c.size(); ++t) {
    out[t] = c[t].first;
    out[c.size() + t] = c[t].second;
  }
  return out;
}

bool validate_gale_dual(const Matrix& m, const VectorConfiguration& v) {
  const std::size_t n = v.size();
  const std::size_t d = v.dimension();
  if (m.rows() != n || n < d + 3 || m.cols() != n - d || m.cols() % 2 == 0) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(j, 0) != Scalar(1)) return false;
  }
  const Matrix product = v.matrix() * m;
  for (std::size_t r = 0; r < product.rows(); ++r) {
    for (std::size_t c = 0; c < product.cols(); ++c) {
      if (!product(r, c).is_zero()) return false;
    }
  }
  return rank(m) == m.cols();
}

GaleDual compute_gale_dual(const VectorConfiguration& v) {
  if (!v.is_normalized()) fail(ErrorCode::NotNormalized, "Gale duals need a balanced odd configuration");
  const Subspace rel = relation_space(v);
  // The all-ones vector replaces the first echelon row; its coefficient there is nonzero.
  std::vector<Vector> columns{Vector(v.size(), Scalar(1))};
  for (std::size_t k = 1; k < rel.dim(); ++k) columns.push_back(rel.basis()[k]);
  return GaleDual::from_matrix(v, Matrix::from_columns(columns, v.size()));
}

GaleTransition gale_transition(const GaleDual& from, const GaleDual& to) {
  const Matrix& m = from.matrix();
  const Matrix& target = to.matrix();
  if (m.rows() != target.rows() || m.cols() != target.cols()) {
    fail(ErrorCode::DimensionMismatch, "Gale duals of different shapes");
  }
  const std::size_t k = m.cols();
  Matrix t(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto col = solve(m, target.column(c));
    if (!col) fail(ErrorCode::InvalidGaleDual, "Gale duals span different relation spaces");
    for (std::size_t r = 0; r < k; ++r) t(r, c) = (*col)[r];
  }
  if (!(m * t == target)) fail(ErrorCode::InternalInconsistency, "transition matrix does not reproduce the target");
  GaleTransition out;
  out.a = Matrix(k - 1, k - 1);
  for (std::size_t c = 1; c < k; ++c) {
    out.b.push_back(t(0, c));
    for (std::size_t r = 1; r < k; ++r) out.a(r - 1, c - 1) = t(r, c);
  }
  for (std::size_t r = 1; r < k; ++r) {
    if (!t(r, 0).is_zero()) fail(ErrorCode::InternalInconsistency, "transition matrix has the wrong first column");
  }
  if (t(0, 0) != Scalar(1) || rank(out.a) != k - 1) {
    fail(ErrorCode::InternalInconsistency, "transition matrix is not of the expected affine form");
  }
  return out;
}

bool in_open_simplex(const GaleDual& g, const IndexSet& indices, const Vector& nu) {
  const std::size_t dim = 2 * g.m();
  if (nu.size() != dim) fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  LinearSystem s;
  s.variables = indices.size();
  for (std::size_t k = 0; k < dim; ++k) {
    AffineForm& eq = s.add_equality();
    for (std::size_t i = 0; i < indices.size(); ++i) eq.coeffs[i] = g.lambda_real(indices[i])[k];
    eq.constant = -nu[k];
  }
  AffineForm& total = s.add_equality();
  for (std::size_t i = 0; i < indices.size(); ++i) total.coeffs[i] = Scalar(1);
  total.constant = Scalar(-1);
  for (std::size_t i = 0; i < indices.size(); ++i) s.add_strict().coeffs[i] = Scalar(1);
  return fm_feasible(s).feasible;
}

namespace {

std::vector<Vector> distinct_points(const GaleDual& g) {
  std::vector<Vector> out;
  for (const auto& p : g.lambda_real_all()) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

Vector affine_row(const Vector& p) {
  Vector row{Scalar(1)};
  row.insert(row.end(), p.begin(), p.end());
  return row;
}

}  // namespace

bool on_arrangement(const GaleDual& g, const Vector& nu) {
  const std::size_t dim = 2 * g.m();
  const auto points = distinct_points(g);
  bool hit = false;
  for_each_combination(points.size(), dim, [&](const std::vector<std::size_t>& pick) {
    std::vector<Vector> rows;
    for (std::size_t i : pick) rows.push_back(affine_row(points[i]));
    if (rank(Matrix::from_rows(rows, dim + 1)) != dim) return true;
    rows.push_back(affine_row(nu));
    if (rank(Matrix::from_rows(rows, dim + 1)) == dim) hit = true;
    return !hit;
  });
  return hit;
}

Triangulation induced_triangulation(const GaleDual& g, const Vector& nu) {
  const VectorConfiguration& v = g.configuration();
  if (nu.size() != 2 * g.m()) fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  if (on_arrangement(g, nu)) fail(ErrorCode::DegeneratePoint, "point lies on a hyperplane spanned by the dual points");
  std::vector<std::size_t> usable;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (!is_zero_vector(v.vector(i))) usable.push_back(i);
  }
  const std::size_t d = v.dimension();
  std::vector<IndexSet> maximal;
  for_each_combination(usable.size(), d, [&](const std::vector<std::size_t>& pick) {
    IndexSet tau;
    std::vector<Vector> cols;
    for (std::size_t i : pick) {
      tau.push_back(usable[i]);
      cols.push_back(v.vector(usable[i]));
    }
    if (rank(Matrix::from_columns(cols, d)) != d) return true;
    if (in_open_simplex(g, complement(tau, v.size()), nu)) maximal.push_back(tau);
    return true;
  });
  if (maximal.empty()) fail(ErrorCode::NotATriangulation, "point lies in no simplex of the dual configuration");
  try {
    return validate_triangulation(v, maximal, GhostPolicy::Allow);
  } catch (const Error& e) {
    fail(ErrorCode::NotATriangulation, std::string("induced family is not a triangulation: ") + e.what());
  }
}

BosioReport bosio_conditions(const Triangulation& t, const GaleDual& g) {
  return bosio_conditions(g.lambda_real_all(), virtual_chamber(t).complements);
}

namespace {

Matrix cone_basis(const Triangulation& t, std::size_t alpha) {
  std::vector<Vector> cols;
  for (std::size_t i : t.maximal()[alpha]) cols.push_back(t.configuration().vector(i));
  return Matrix::from_columns(cols, t.dimension());
}

}  // namespace

Vector cone_linear_form(const Triangulation& t, std::size_t alpha, const Vector& omega) {
  const IndexSet& e = t.maximal()[alpha];
  Vector rhs;
  for (std::size_t i : e) rhs.push_back(omega[i - 1]);
  const auto phi = solve(cone_basis(t, alpha).transpose(), rhs);
  if (!phi) fail(ErrorCode::InternalInconsistency, "maximal cone basis is singular");
  return *phi;
}

RegularityResult regularity_witness(const Triangulation& t) {
  const VectorConfiguration& v = t.configuration();
  const std::size_t n = v.size();
  LinearSystem s;
  s.variables = n;
  // Gauge: adding a global linear form to omega changes nothing, so fix it on the first cone.
  for (std::size_t i : t.maximal().front()) {
    AffineForm& eq = s.add_equality();
    eq.coeffs[i - 1] = Scalar(1);
    eq.constant = Scalar(-1);
  }
  for (std::size_t alpha = 0; alpha < t.maximal().size(); ++alpha) {
    const IndexSet& e = t.maximal()[alpha];
    const Matrix basis = cone_basis(t, alpha);
    for (std::size_t j = 1; j <= n; ++j) {
      if (std::binary_search(e.begin(), e.end(), j)) continue;
      const auto coords = solve(basis, v.vector(j));
      if (!coords) fail(ErrorCode::InternalInconsistency, "maximal cone basis is singular");
      AffineForm& f = s.add_strict();
      f.coeffs[j - 1] = Scalar(1);
      for (std::size_t k = 0; k < e.size(); ++k) f.coeffs[e[k] - 1] -= (*coords)[k];
    }
  }
  const FeasibilityResult r = fm_feasible(s);
  if (!r.feasible) return {};
  if (!verify_height_function(t, r.witness)) {
    fail(ErrorCode::InternalInconsistency, "height function witness fails the convexity check");
  }
  if (!v.is_normalized()) return {true, r.witness};

  // Valid heights form an open cone, so a small perturbation moves the Lee point off
  // every line spanned by dual points while keeping the triangulation.
  const GaleDual g = compute_gale_dual(v);
  if (!on_arrangement(g, lee_point(g, r.witness))) return {true, r.witness};
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> step(-3, 3);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vector delta(n);
    for (auto& x : delta) x = Scalar(step(rng));
    Rational eps(1);
    for (int k = 0; k < 40; ++k) {
      eps /= 2;
      Vector omega = r.witness;
      for (std::size_t i = 0; i < n; ++i) omega[i] += Scalar(eps) * delta[i];
      if (!verify_height_function(t, omega)) continue;
      if (!on_arrangement(g, lee_point(g, omega))) return {true, omega};
    }
  }
  return {true, r.witness};
}

bool verify_height_function(const Triangulation& t, const Vector& omega) {
  const VectorConfiguration& v = t.configuration();
  if (omega.size() != v.size()) fail(ErrorCode::DimensionMismatch, "height function has the wrong length");
  std::vector<Vector> forms;
  for (std::size_t alpha = 0; alpha < t.maximal().size(); ++alpha) {
    const Vector phi = cone_linear_form(t, alpha, omega);
    const IndexSet& e = t.maximal()[alpha];
    for (std::size_t j = 1; j <= v.size(); ++j) {
      if (std::binary_search(e.begin(), e.end(), j)) continue;
      if (sign(omega[j - 1] - dot(phi, v.vector(j))) <= 0) return false;
    }
    if (std::find(forms.begin(), forms.end(), phi) != forms.end()) return false;
    forms.push_back(phi);
  }
  return true;
}

Vector lee_point(const GaleDual& g, const Vector& omega) {
  if (omega.size() != g.size()) fail(ErrorCode::DimensionMismatch, "height function has the wrong length");
  Scalar total;
  for (const auto& w : omega) total += w;
  if (total.is_zero()) fail(ErrorCode::ZeroTotalWeight, "height function sums to zero");
  Vector nu(2 * g.m());
  for (std::size_t j = 1; j <= g.size(); ++j) {
    const Vector p = g.lambda_real(j);
    for (std::size_t k = 0; k < nu.size(); ++k) nu[k] += omega[j - 1] * p[k];
  }
  const Scalar inv = invert(total);
  for (auto& x : nu) x *= inv;
  return nu;
}

namespace {

bool upper_half(const Vector& d) {
  const int sy = sign(d[1]);
  return sy > 0 || (sy == 0 && sign(d[0]) > 0);
}

// Counterclockwise angular order starting from the positive x axis.
bool angle_less(const Vector& a, const Vector& b) {
  const bool ua = upper_half(a);
  const bool ub = upper_half(b);
  if (ua != ub) return ua;
  return sign(a[0] * b[1] - a[1] * b[0]) > 0;
}

bool point_less(const Vector& a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int c = compare(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

LineArrangement line_arrangement(const GaleDual& g) {
  if (g.m() != 1) fail(ErrorCode::DimensionUnsupported, "chamber enumeration needs 2m = 2");
  LineArrangement out;
  out.points = distinct_points(g);
  const auto& pts = out.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Scalar a = pts[i][1] - pts[j][1];
      Scalar b = pts[j][0] - pts[i][0];
      Scalar c = a * pts[i][0] + b * pts[i][1];
      const Scalar lead = a.is_zero() ? b : a;
      const Scalar inv = invert(lead);
      std::array<Scalar, 3> line{a * inv, b * inv, c * inv};
      if (std::find(out.lines.begin(), out.lines.end(), line) == out.lines.end()) {
        out.lines.push_back(line);
        out.line_points.emplace_back(pts[i], pts[j]);
      }
    }
  }
  return out;
}

std::vector<Chamber2D> enumerate_chambers_2d(const GaleDual& g) {
  const LineArrangement arr = line_arrangement(g);
  const auto& lines = arr.lines;

  std::vector<Vector> vertices;
  std::vector<std::vector<std::size_t>> on_line(lines.size());
  const auto vertex_id = [&](const Vector& p) {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    if (it != vertices.end()) return static_cast<std::size_t>(it - vertices.begin());
    vertices.push_back(p);
    return vertices.size() - 1;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [a1, b1, c1] = lines[i];
      const auto& [a2, b2, c2] = lines[j];
      const Scalar det = a1 * b2 - a2 * b1;
      if (det.is_zero()) continue;
      const Scalar inv = invert(det);
      const std::size_t id = vertex_id(Vector{(c1 * b2 - c2 * b1) * inv, (a1 * c2 - a2 * c1) * inv});
      for (std::size_t l : {i, j}) {
        if (std::find(on_line[l].begin(), on_line[l].end(), id) == on_line[l].end()) on_line[l].push_back(id);
      }
    }
  }

  // Bounded edges between consecutive vertices along each line, as half-edges.
  std::vector<std::pair<std::size_t, std::size_t>> half_edges;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    auto& ids = on_line[l];
    const Scalar& a = lines[l][0];
    const Scalar& b = lines[l][1];
    const auto key = [&](std::size_t id) { return a * vertices[id][1] - b * vertices[id][0]; };
    std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) { return compare(key(x), key(y)) < 0; });
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      half_edges.emplace_back(ids[k], ids[k + 1]);
      half_edges.emplace_back(ids[k + 1], ids[k]);
    }
  }
  const auto direction = [&](std::size_t h) {
    const auto& [from, to] = half_edges[h];
    return Vector{vertices[to][0] - vertices[from][0], vertices[to][1] - vertices[from][1]};
  };
  std::vector<std::vector<std::size_t>> outgoing(vertices.size());
  for (std::size_t h = 0; h < half_edges.size(); ++h) outgoing[half_edges[h].first].push_back(h);
  std::vector<std::size_t> slot(half_edges.size());
  for (auto& list : outgoing) {
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) { return angle_less(direction(x), direction(y)); });
    for (std::size_t k = 0; k < list.size(); ++k) slot[list[k]] = k;
  }
  const auto twin = [&](std::size_t h) { return h ^ std::size_t{1}; };

  std::vector<Chamber2D> chambers;
  std::vector<bool> used(half_edges.size(), false);
  for (std::size_t start = 0; start < half_edges.size(); ++start) {
    if (used[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t h = start;
    while (!used[h]) {
      used[h] = true;
      cycle.push_back(half_edges[h].first);
      const std::size_t back = twin(h);
      const auto& around = outgoing[half_edges[h].second];
      h = around[(slot[back] + around.size() - 1) % around.size()];
    }
    Scalar area2;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Vector& p = vertices[cycle[k]];
      const Vector& q = vertices[cycle[(k + 1) % cycle.size()]];
      area2 += p[0] * q[1] - p[1] * q[0];
    }
    if (sign(area2) <= 0) continue;
    Chamber2D chamber;
    const auto first = std::min_element(cycle.begin(), cycle.end(), [&](std::size_t x, std::size_t y) {
      return point_less(vertices[x], vertices[y]);
    });
    std::rotate(cycle.begin(), first, cycle.end());
    Vector centroid(2);
    for (std::size_t id : cycle) {
      chamber.vertex_cycle.push_back(vertices[id]);
      centroid[0] += vertices[id][0];
      centroid[1] += vertices[id][1];
    }
    const Scalar inv(Rational(1, static_cast<long>(cycle.size())));
    centroid[0] *= inv;
    centroid[1] *= inv;
    chamber.interior_point = centroid;
    try {
      chamber.triangulation = induced_triangulation(g, centroid).maximal();
    } catch (const Error& e) {
      chamber.triangulation_error = e.code_name();
    }
    chambers.push_back(std::move(chamber));
  }
  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber2D& a, const Chamber2D& b) { return point_less(a.interior_point, b.interior_point); });
  return chambers;
}

std::vector<Vector> lvm_embedding_coefficients(const GaleDual& g, const Vector& nu) {
  if (nu.size() != 2 * g.m()) fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  std::vector<Vector> out;
  for (std::size_t j = 1; j <= g.size(); ++j) {
    Vector p = g.lambda_real(j);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] -= nu[k];
    out.push_back(std::move(p));
  }
  return out;
}

bool embedding_has_positive_solution(const GaleDual& g, const Vector& nu) {
  const auto coeffs = lvm_embedding_coefficients(g, nu);
  LinearSystem s;
  s.variables = coeffs.size();
  for (std::size_t k = 0; k < nu.size(); ++k) {
    AffineForm& eq = s.add_equality();
    for (std::size_t j = 0; j < coeffs.size(); ++j) eq.coeffs[j] = coeffs[j][k];
  }
  for (std::size_t j = 0; j < coeffs.size(); ++j) s.add_strict().coeffs[j] = Scalar(1);
  return fm_feasible(s).feasible;
}

}  // namespace fanforge
