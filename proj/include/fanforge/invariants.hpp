#pragma once

#include "fanforge/gale.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanforge {

// Positions refer to Triangulation::maximal() (0-based); restriction sets hold 1-based vector indices.
struct Shelling {
  std::vector<std::size_t> order;
  std::vector<IndexSet> restrictions;
  std::vector<std::size_t> indices;
};

// Throws InvalidShelling when the order is not a shelling.
Shelling shelling_from_order(const Triangulation& t, const std::vector<std::size_t>& order);

// Height order when omega is given, otherwise depth-first search.
Shelling find_shelling(const Triangulation& t, const std::optional<Vector>& omega = std::nullopt);

// Every shelling order, up to limit of them.
std::vector<Shelling> enumerate_shellings(const Triangulation& t, std::size_t limit = 100000);

using HVector = std::vector<long>;

HVector h_vector_from_shelling(const Shelling& s, std::size_t d);
// f = (f_{-1}, ..., f_{d-1}).
HVector h_vector_from_f(const std::vector<std::size_t>& f, std::size_t d);

// b^0..b^{2d}: even entries are h_j, odd ones vanish.
std::vector<long> basic_betti(const HVector& h);
bool dehn_sommerville_check(const HVector& h);
// g_1..g_delta with delta = floor(d/2).
std::vector<long> g_vector(const HVector& h);
// a^{<j>}, the Macaulay pseudopower.
long macaulay_pseudopower(long a, std::size_t j);
// seq = (g_0, g_1, ..., g_delta) with g_0 = 1.
bool m_sequence_check(const std::vector<long>& seq);

struct LeafStratum {
  IndexSet simplex;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t torus_rank = 0;      // b - 1
  std::size_t euclidean_rank = 0;  // 2m - b + 1
  std::size_t closure_torus_rank = 0;
  bool is_closed = false;
};

// One stratum per face of T, in the order of Triangulation::faces().
std::vector<LeafStratum> leaf_stratification(const Triangulation& t, const GaleDual& g);

enum class LeafSpaceClass { RationalOrbifold, TotallyNonrationalCorners, Intermediate };

std::string leaf_space_class_name(LeafSpaceClass c);
LeafSpaceClass classify_leaf_space(const std::vector<LeafStratum>& strata, std::size_t m, std::size_t n);
std::size_t a_invariant(const VectorConfiguration& v);

bool closed_strata_lattice_check(const std::vector<LeafStratum>& strata, const Triangulation& t);

struct InvariantReport {
  std::vector<std::size_t> f_vector;
  HVector h_vector;
  std::vector<long> g_vector;
  std::vector<long> basic_betti;
  bool dehn_sommerville = false;
  bool g_nonnegative = false;
  bool m_sequence_ok = false;
  std::size_t a_invariant = 0;
  LeafSpaceClass leaf_space_class = LeafSpaceClass::Intermediate;
  Shelling shelling;
  std::vector<LeafStratum> strata;
  bool regular = false;
  Vector omega;
};

// Throws InternalInconsistency when a regular instance violates g >= 0 or the M-sequence bound.
InvariantReport compute_invariants(const Triangulation& t, const GaleDual& g);

}  // namespace fanforge
