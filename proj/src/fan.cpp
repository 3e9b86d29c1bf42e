#include "fanforge/fan.hpp"

#include "fanforge/error.hpp"
#include "fanforge/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace fanforge {

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

IndexSet complement(const IndexSet& s, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<std::size_t> Triangulation::position_of(const IndexSet& s) const {
  auto it = std::find(maximal_.begin(), maximal_.end(), s);
  if (it == maximal_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - maximal_.begin());
}

bool cones_meet_properly(const VectorConfiguration& v, const IndexSet& a, const IndexSet& b) {
  const IndexSet shared = set_intersection(a, b);
  if (shared.size() == a.size()) return true;
  const std::size_t d = v.dimension();
  LinearSystem s;
  s.variables = a.size() + b.size();
  for (std::size_t k = 0; k < d; ++k) {
    AffineForm& eq = s.add_equality();
    for (std::size_t i = 0; i < a.size(); ++i) eq.coeffs[i] = v.vector(a[i])[k];
    for (std::size_t j = 0; j < b.size(); ++j) eq.coeffs[a.size() + j] = -v.vector(b[j])[k];
  }
  for (std::size_t x = 0; x < s.variables; ++x) s.add_weak().coeffs[x] = Scalar(1);
  AffineForm& outside = s.add_strict();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::binary_search(b.begin(), b.end(), a[i])) outside.coeffs[i] = Scalar(1);
  }
  return !fm_feasible(s).feasible;
}

namespace {

void check_simplex(const VectorConfiguration& v, IndexSet& s, GhostPolicy policy) {
  std::sort(s.begin(), s.end());
  const std::string name = format_index_set(s);
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(ErrorCode::NotASimplex, name + " repeats an index");
  for (std::size_t i : s) {
    if (i == 0 || i > v.size()) fail(ErrorCode::IndexOutOfRange, name + " uses index " + std::to_string(i));
  }
  if (policy == GhostPolicy::Reject) {
    for (std::size_t i : s) {
      if (v.is_ghost(i)) fail(ErrorCode::GhostInSimplex, name + " contains ghost " + std::to_string(i));
    }
  }
  if (s.empty()) fail(ErrorCode::NotComplete, "the empty simplex cannot be maximal in a complete fan");
  if (s.size() > v.dimension()) fail(ErrorCode::NotASimplex, name + " has more than d vectors");
  std::vector<Vector> cols;
  for (std::size_t i : s) cols.push_back(v.vector(i));
  if (rank(Matrix::from_columns(cols, v.dimension())) != s.size()) {
    fail(ErrorCode::NotASimplex, name + " is linearly dependent");
  }
}

void check_coverage(const VectorConfiguration& v, const std::vector<IndexSet>& maximal) {
  const std::size_t d = v.dimension();
  std::map<IndexSet, std::vector<std::size_t>> ridges;
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (std::size_t skip = 0; skip < d; ++skip) {
      IndexSet ridge;
      for (std::size_t k = 0; k < d; ++k) {
        if (k != skip) ridge.push_back(maximal[a][k]);
      }
      ridges[ridge].push_back(a);
    }
  }
  std::vector<std::vector<std::size_t>> adjacent(maximal.size());
  for (const auto& [ridge, cofaces] : ridges) {
    if (cofaces.size() != 2) {
      fail(ErrorCode::NotComplete, "ridge " + format_index_set(ridge) + " lies in " + std::to_string(cofaces.size()) +
                                       " maximal simplices instead of 2");
    }
    adjacent[cofaces[0]].push_back(cofaces[1]);
    adjacent[cofaces[1]].push_back(cofaces[0]);
  }
  std::vector<bool> seen(maximal.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t a = todo.front();
    todo.pop();
    for (std::size_t b : adjacent[a]) {
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        todo.push(b);
      }
    }
  }
  if (reached != maximal.size()) fail(ErrorCode::NotComplete, "the dual graph of the fan is disconnected");
}

// Redundant check that a few pseudo-random directions are covered.
void check_sample_directions(const VectorConfiguration& v, const std::vector<IndexSet>& maximal) {
  const std::size_t d = v.dimension();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Matrix> bases;
  for (const auto& s : maximal) {
    std::vector<Vector> cols;
    for (std::size_t i : s) cols.push_back(v.vector(i));
    bases.push_back(Matrix::from_columns(cols, d));
  }
  for (int sample = 0; sample < 8; ++sample) {
    Vector u(d);
    bool nonzero = false;
    for (auto& x : u) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      x = Scalar(q);
      nonzero = nonzero || q != 0;
    }
    if (!nonzero) u[0] = Scalar(1);
    bool covered = false;
    for (const auto& b : bases) {
      const auto coeffs = solve(b, u);
      if (coeffs && std::all_of(coeffs->begin(), coeffs->end(), [](const Scalar& c) { return sign(c) >= 0; })) {
        covered = true;
        break;
      }
    }
    if (!covered) fail(ErrorCode::NotComplete, "a sample direction lies in no maximal cone");
  }
}

}  // namespace

Triangulation validate_triangulation(const VectorConfiguration& v, std::vector<IndexSet> maximal, GhostPolicy policy) {
  if (maximal.empty()) fail(ErrorCode::NotComplete, "no maximal simplices");
  for (auto& s : maximal) check_simplex(v, s, policy);
  for (const auto& s : maximal) {
    if (s.size() != v.dimension()) {
      fail(ErrorCode::NotComplete, format_index_set(s) + " has fewer than d vectors; the fan is not pure of full dimension");
    }
  }
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal.size(); ++b) {
      if (maximal[a] == maximal[b] || !cones_meet_properly(v, maximal[a], maximal[b])) {
        fail(ErrorCode::ImproperIntersection, "cones of " + format_index_set(maximal[a]) + " and " +
                                                  format_index_set(maximal[b]) + " overlap improperly");
      }
    }
  }
  check_coverage(v, maximal);
  check_sample_directions(v, maximal);

  Triangulation t(v);
  t.maximal_ = std::move(maximal);
  std::set<IndexSet> faces;
  for (const auto& s : t.maximal_) {
    const std::size_t k = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      IndexSet f;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (std::size_t{1} << j)) f.push_back(s[j]);
      }
      faces.insert(std::move(f));
    }
  }
  t.faces_.assign(faces.begin(), faces.end());
  std::stable_sort(t.faces_.begin(), t.faces_.end(),
                   [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
  t.f_.assign(v.dimension() + 1, 0);
  for (const auto& f : t.faces_) ++t.f_[f.size()];
  return t;
}

VirtualChamber virtual_chamber(const Triangulation& t) {
  const auto& v = t.configuration();
  if (!v.is_normalized()) fail(ErrorCode::NotNormalized, "virtual chambers need a balanced odd configuration");
  VirtualChamber out;
  for (const auto& s : t.maximal()) out.complements.push_back(complement(s, v.size()));
  return out;
}

BosioReport bosio_conditions(const std::vector<Vector>& lambda_r, const std::vector<IndexSet>& complements) {
  BosioReport report;
  const std::size_t n = lambda_r.size();
  const std::size_t dim = n ? lambda_r.front().size() : 0;

  for (std::size_t a = 0; a < complements.size() && report.condition_i; ++a) {
    for (std::size_t b = a + 1; b < complements.size(); ++b) {
      const IndexSet& ea = complements[a];
      const IndexSet& eb = complements[b];
      LinearSystem s;
      s.variables = ea.size() + eb.size();
      for (std::size_t k = 0; k < dim; ++k) {
        AffineForm& eq = s.add_equality();
        for (std::size_t i = 0; i < ea.size(); ++i) eq.coeffs[i] = lambda_r[ea[i] - 1][k];
        for (std::size_t j = 0; j < eb.size(); ++j) eq.coeffs[ea.size() + j] = -lambda_r[eb[j] - 1][k];
      }
      {
        AffineForm& sum_a = s.add_equality();
        for (std::size_t i = 0; i < ea.size(); ++i) sum_a.coeffs[i] = Scalar(1);
        sum_a.constant = Scalar(-1);
      }
      {
        AffineForm& sum_b = s.add_equality();
        for (std::size_t j = 0; j < eb.size(); ++j) sum_b.coeffs[ea.size() + j] = Scalar(1);
        sum_b.constant = Scalar(-1);
      }
      for (std::size_t x = 0; x < s.variables; ++x) s.add_strict().coeffs[x] = Scalar(1);
      if (!fm_feasible(s).feasible) {
        report.condition_i = false;
        report.disjoint_pair = std::make_pair(a + 1, b + 1);
        break;
      }
    }
  }

  const std::set<IndexSet> family(complements.begin(), complements.end());
  for (std::size_t a = 0; a < complements.size() && report.condition_ii; ++a) {
    const IndexSet& ec = complements[a];
    for (std::size_t i = 1; i <= n; ++i) {
      if (std::binary_search(ec.begin(), ec.end(), i)) continue;
      bool exchanged = false;
      for (std::size_t k : ec) {
        IndexSet candidate;
        for (std::size_t j : ec) {
          if (j != k) candidate.push_back(j);
        }
        candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), i), i);
        if (family.count(candidate)) {
          exchanged = true;
          break;
        }
      }
      if (!exchanged) {
        report.condition_ii = false;
        report.failed_exchange = std::make_pair(a + 1, i);
        break;
      }
    }
  }
  return report;
}

}  // namespace fanforge
