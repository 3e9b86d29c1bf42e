#pragma once

// Desk-scale corpus of triangulated configurations for the property suites.

#include "support.hpp"

#include "fanforge/configuration.hpp"
#include "fanforge/fan.hpp"

#include <random>
#include <string>
#include <vector>

namespace fanforge::testing {

struct Instance {
  std::string name;
  VectorConfiguration config;
  std::vector<IndexSet> maximal;
  // Polygon fans record their ray count; zero for the other families.
  std::size_t rays = 0;
};

inline int cross_sign(const Vector& a, const Vector& b) { return sign(a[0] * b[1] - a[1] * b[0]); }

// Rays listed counterclockwise with consecutive gaps below pi; triangulation by consecutive pairs.
inline Instance polygon_instance(const std::string& name, std::vector<Vector> rays) {
  const std::size_t k = rays.size();
  std::vector<IndexSet> maximal;
  for (std::size_t i = 1; i <= k; ++i) {
    IndexSet s{i, i % k + 1};
    std::sort(s.begin(), s.end());
    maximal.push_back(s);
  }
  VectorConfiguration v = normalize_configuration(VectorConfiguration(2, std::move(rays), 0));
  return {name, std::move(v), std::move(maximal), k};
}

inline std::vector<Vector> square_rays() {
  return {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(1)}, Vector{Scalar(-1), Scalar(0)},
          Vector{Scalar(0), Scalar(-1)}};
}

inline std::vector<Vector> hexagon_rays() {
  return {Vector{Scalar(1), Scalar(0)},  Vector{Scalar(1), Scalar(1)},   Vector{Scalar(0), Scalar(1)},
          Vector{Scalar(-1), Scalar(0)}, Vector{Scalar(-1), Scalar(-1)}, Vector{Scalar(0), Scalar(-1)}};
}

// V = (a, -b) in dimension one, normalized, with the fan {{1},{2}}.
inline Instance line_instance(const std::string& name, const Scalar& a, const Scalar& b) {
  VectorConfiguration v = normalize_configuration(VectorConfiguration(1, {Vector{a}, Vector{-b}}, 0));
  return {name, std::move(v), {{1}, {2}}, 0};
}

// V = (p, -q, 1, q - p - 1) with the last two as ghosts.
inline Instance weighted_line_instance(const std::string& name, const Scalar& p, const Scalar& q) {
  VectorConfiguration v(1, {Vector{p}, Vector{-q}, Vector{Scalar(1)}, Vector{q - p - Scalar(1)}}, 2);
  return {name, std::move(v), {{1}, {2}}, 0};
}

// Axes scaled by positive factors, triangulated by the coordinate octants.
inline Instance octahedral_instance(const std::string& name, const std::vector<Scalar>& scale) {
  std::vector<Vector> vectors;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    for (int s : {1, -1}) {
      Vector v(3);
      v[axis] = Scalar(s) * scale[vectors.size()];
      vectors.push_back(v);
    }
  }
  std::vector<IndexSet> maximal;
  for (std::size_t a : {1, 2}) {
    for (std::size_t b : {3, 4}) {
      for (std::size_t c : {5, 6}) maximal.push_back({a, b, c});
    }
  }
  VectorConfiguration v = normalize_configuration(VectorConfiguration(3, std::move(vectors), 0));
  return {name, std::move(v), std::move(maximal), 0};
}

inline std::vector<Vector> random_polygon_rays(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<int> coord(-4, 4);
  for (;;) {
    std::vector<Vector> rays;
    while (rays.size() < k) {
      Vector r{Scalar(coord(rng)), Scalar(coord(rng))};
      if (is_zero_vector(r)) continue;
      bool parallel = false;
      for (const auto& q : rays) {
        if (cross_sign(q, r) == 0 && sign(dot(q, r)) > 0) parallel = true;
      }
      if (!parallel) rays.push_back(r);
    }
    const auto upper = [](const Vector& d) { return sign(d[1]) > 0 || (sign(d[1]) == 0 && sign(d[0]) > 0); };
    std::sort(rays.begin(), rays.end(), [&](const Vector& a, const Vector& b) {
      if (upper(a) != upper(b)) return upper(a);
      return cross_sign(a, b) > 0;
    });
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (cross_sign(rays[i], rays[(i + 1) % k]) <= 0) ok = false;
    }
    if (ok) return rays;
  }
}

// Positive elements a + b*s of Q(s).
inline Scalar random_positive(std::mt19937_64& rng, const TablePtr& t) {
  std::uniform_int_distribution<int> coef(-2, 3);
  for (;;) {
    Scalar x = Scalar(Q(coef(rng), 1)) + Scalar(Q(coef(rng), 2)) * Scalar::symbol(t, 0);
    if (sign(x) > 0) return x;
  }
}

// Mixed corpus: rational and Q(sqrt 2) polygon fans, lines and octahedral fans.
inline std::vector<Instance> desk_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const TablePtr t = sqrt_table();
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<std::size_t> ray_count(3, 6);
  std::vector<Instance> out;
  while (out.size() < count) {
    const std::string name = "instance " + std::to_string(out.size());
    const int pick = kind(rng);
    if (pick <= 3) {
      out.push_back(polygon_instance(name + " (rational polygon)", random_polygon_rays(rng, ray_count(rng))));
    } else if (pick <= 6) {
      // Irrational shear and scaling keep the fan combinatorics.
      auto rays = random_polygon_rays(rng, ray_count(rng));
      const Scalar s = Scalar::symbol(t, 0);
      for (auto& r : rays) {
        const Scalar f = random_positive(rng, t);
        r = Vector{f * (r[0] + s * r[1]), f * r[1]};
      }
      out.push_back(polygon_instance(name + " (Q(sqrt2) polygon)", std::move(rays)));
    } else if (pick == 7) {
      if (rng() % 2) {
        out.push_back(line_instance(name + " (line)", random_positive(rng, t), random_positive(rng, t)));
      } else {
        out.push_back(weighted_line_instance(name + " (weighted line)", random_positive(rng, t), random_positive(rng, t)));
      }
    } else {
      std::vector<Scalar> scale;
      for (int i = 0; i < 6; ++i) scale.push_back(pick == 8 ? Scalar(Q(1 + rng() % 3, 1 + rng() % 2)) : random_positive(rng, t));
      out.push_back(octahedral_instance(name + " (octahedral)", scale));
    }
  }
  return out;
}

}  // namespace fanforge::testing
