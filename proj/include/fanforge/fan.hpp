#pragma once

#include "fanforge/configuration.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fanforge {

// Sorted 1-based indices.
using IndexSet = std::vector<std::size_t>;

std::string format_index_set(const IndexSet& s);
IndexSet complement(const IndexSet& s, std::size_t n);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);

enum class GhostPolicy {
  Reject,  // ghost indices in a simplex are an error
  Allow,   // any nonzero vector may be used (chamber-induced triangulations)
};

// A validated complete pure simplicial fan over a configuration.
class Triangulation {
 public:
  const VectorConfiguration& configuration() const { return config_; }
  const std::vector<IndexSet>& maximal() const { return maximal_; }
  // Every face including the empty one, ordered by size then lexicographically.
  const std::vector<IndexSet>& faces() const { return faces_; }
  // f_{-1}, f_0, ..., f_{d-1}
  const std::vector<std::size_t>& f_vector() const { return f_; }
  std::size_t dimension() const { return config_.dimension(); }
  // Position (0-based) of a maximal simplex, if present.
  std::optional<std::size_t> position_of(const IndexSet& s) const;

 private:
  friend Triangulation validate_triangulation(const VectorConfiguration&, std::vector<IndexSet>, GhostPolicy);
  explicit Triangulation(VectorConfiguration config) : config_(std::move(config)) {}

  VectorConfiguration config_;
  std::vector<IndexSet> maximal_;
  std::vector<IndexSet> faces_;
  std::vector<std::size_t> f_;
};

Triangulation validate_triangulation(const VectorConfiguration& v, std::vector<IndexSet> maximal,
                                     GhostPolicy policy = GhostPolicy::Reject);

// True when cone(a) and cone(b) meet exactly in cone(a intersect b).
bool cones_meet_properly(const VectorConfiguration& v, const IndexSet& a, const IndexSet& b);

struct VirtualChamber {
  std::vector<IndexSet> complements;
};

VirtualChamber virtual_chamber(const Triangulation& t);

struct BosioReport {
  bool condition_i = true;
  // 1-based positions (alpha, beta) of complements whose simplices' interiors are disjoint.
  std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;
  bool condition_ii = true;
  // 1-based complement position alpha and index i in E_alpha with no exchange.
  std::optional<std::pair<std::size_t, std::size_t>> failed_exchange;
};

// Bosio's conditions for a family of complements over the points lambda_r.
BosioReport bosio_conditions(const std::vector<Vector>& lambda_r, const std::vector<IndexSet>& complements);

}  // namespace fanforge
