#include "fanforge/invariants.hpp"

#include "fanforge/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace fanforge {

namespace {

// Restriction of e against the earlier simplices, or nullopt when e does not attach along facets.
std::optional<IndexSet> restriction_of(const IndexSet& e, const std::vector<const IndexSet*>& earlier) {
  if (earlier.empty()) return IndexSet{};
  IndexSet r;
  for (std::size_t i : e) {
    IndexSet facet;
    for (std::size_t k : e) {
      if (k != i) facet.push_back(k);
    }
    for (const IndexSet* b : earlier) {
      if (is_subset(facet, *b)) {
        r.push_back(i);
        break;
      }
    }
  }
  if (r.empty()) return std::nullopt;
  for (const IndexSet* b : earlier) {
    const bool covered = std::any_of(r.begin(), r.end(), [&](std::size_t i) { return !std::binary_search(b->begin(), b->end(), i); });
    if (!covered) return std::nullopt;
  }
  return r;
}

std::vector<const IndexSet*> chosen(const Triangulation& t, const std::vector<std::size_t>& order) {
  std::vector<const IndexSet*> out;
  for (std::size_t a : order) out.push_back(&t.maximal()[a]);
  return out;
}

class ShellingSearch {
 public:
  ShellingSearch(const Triangulation& t, std::size_t limit) : t_(t), limit_(limit), used_(t.maximal().size(), 0) {}

  // Returns true once limit_ complete orders have been collected.
  bool run() {
    if (sequence_.size() == used_.size()) {
      found_.push_back(sequence_);
      return found_.size() >= limit_;
    }
    if (dead_.count(used_)) return false;
    const std::size_t before = found_.size();
    const auto earlier = chosen(t_, sequence_);
    for (std::size_t a = 0; a < used_.size(); ++a) {
      if (used_[a] || !restriction_of(t_.maximal()[a], earlier)) continue;
      used_[a] = 1;
      sequence_.push_back(a);
      const bool stop = run();
      sequence_.pop_back();
      used_[a] = 0;
      if (stop) return true;
    }
    if (found_.size() == before) dead_.insert(used_);
    return false;
  }

  const std::vector<std::vector<std::size_t>>& found() const { return found_; }

 private:
  const Triangulation& t_;
  std::size_t limit_;
  std::vector<char> used_;
  std::vector<std::size_t> sequence_;
  std::set<std::vector<char>> dead_;
  std::vector<std::vector<std::size_t>> found_;
};

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Shelling shelling_by_search(const Triangulation& t) {
  ShellingSearch search(t, 1);
  search.run();
  if (search.found().empty()) fail(ErrorCode::NoShellingFound, "no ordering of the maximal simplices is a shelling");
  return shelling_from_order(t, search.found().front());
}

}  // namespace

Shelling shelling_from_order(const Triangulation& t, const std::vector<std::size_t>& order) {
  const std::size_t count = t.maximal().size();
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k) {
    if (check[k] != k) fail(ErrorCode::InvalidShelling, "order is not a permutation of the maximal simplices");
  }
  if (check.size() != count) fail(ErrorCode::InvalidShelling, "order is not a permutation of the maximal simplices");
  Shelling s;
  s.order = order;
  std::vector<std::size_t> prefix;
  for (std::size_t a : order) {
    const auto r = restriction_of(t.maximal()[a], chosen(t, prefix));
    if (!r) {
      fail(ErrorCode::InvalidShelling, format_index_set(t.maximal()[a]) + " does not meet its predecessors in a union of facets");
    }
    s.restrictions.push_back(*r);
    s.indices.push_back(r->size());
    prefix.push_back(a);
  }
  return s;
}

Shelling find_shelling(const Triangulation& t, const std::optional<Vector>& omega) {
  if (!omega) return shelling_by_search(t);
  if (!verify_height_function(t, *omega)) {
    fail(ErrorCode::NotATriangulation, "height function does not induce the triangulation");
  }
  const std::size_t d = t.dimension();
  std::vector<Vector> vertices;
  for (std::size_t a = 0; a < t.maximal().size(); ++a) vertices.push_back(cone_linear_form(t, a, *omega));

  std::mt19937_64 rng(0x9e3779b9);
  for (long attempt = 1; attempt <= 32; ++attempt) {
    std::uniform_int_distribution<long> num(-1000 * attempt, 1000 * attempt);
    std::uniform_int_distribution<long> den(1, 97 * attempt);
    Vector gamma(d);
    for (auto& x : gamma) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      x = Scalar(q);
    }
    std::vector<Scalar> height;
    for (const auto& x : vertices) height.push_back(dot(gamma, x));
    std::vector<std::size_t> order(vertices.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return compare(height[a], height[b]) < 0; });
    bool tie = false;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      if (compare(height[order[k]], height[order[k + 1]]) == 0) tie = true;
    }
    if (tie) continue;
    try {
      return shelling_from_order(t, order);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidShelling) throw;
      return shelling_by_search(t);
    }
  }
  fail(ErrorCode::TieUnresolvable, "no generic direction separates the polytope vertices");
}

std::vector<Shelling> enumerate_shellings(const Triangulation& t, std::size_t limit) {
  ShellingSearch search(t, limit);
  search.run();
  std::vector<Shelling> out;
  for (const auto& order : search.found()) out.push_back(shelling_from_order(t, order));
  return out;
}

HVector h_vector_from_shelling(const Shelling& s, std::size_t d) {
  HVector h(d + 1, 0);
  for (std::size_t i : s.indices) {
    if (i > d) fail(ErrorCode::InvalidShelling, "shelling index exceeds the dimension");
    ++h[i];
  }
  return h;
}

HVector h_vector_from_f(const std::vector<std::size_t>& f, std::size_t d) {
  if (f.size() != d + 1) fail(ErrorCode::DimensionMismatch, "f-vector must have d + 1 entries");
  HVector h(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const long term = binomial(static_cast<long>(d - i), static_cast<long>(k - i)) * static_cast<long>(f[i]);
      h[k] += ((k - i) % 2 == 0) ? term : -term;
    }
  }
  return h;
}

std::vector<long> basic_betti(const HVector& h) {
  std::vector<long> b(2 * h.size() - 1, 0);
  for (std::size_t j = 0; j < h.size(); ++j) b[2 * j] = h[j];
  return b;
}

bool dehn_sommerville_check(const HVector& h) {
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] != h[h.size() - 1 - j]) return false;
  }
  return true;
}

std::vector<long> g_vector(const HVector& h) {
  const std::size_t d = h.size() - 1;
  std::vector<long> g;
  for (std::size_t j = 1; j <= d / 2; ++j) g.push_back(h[j] - h[j - 1]);
  return g;
}

long macaulay_pseudopower(long a, std::size_t j) {
  if (j == 0) fail(ErrorCode::DimensionMismatch, "pseudopowers start at j = 1");
  long result = 0;
  for (long k = static_cast<long>(j); k >= 1 && a > 0; --k) {
    long top = k;
    while (binomial(top + 1, k) <= a) ++top;
    a -= binomial(top, k);
    result += binomial(top + 1, k + 1);
  }
  return result;
}

bool m_sequence_check(const std::vector<long>& seq) {
  if (seq.empty() || seq[0] != 1) return false;
  for (long x : seq) {
    if (x < 0) return false;
  }
  for (std::size_t j = 1; j + 1 < seq.size(); ++j) {
    if (seq[j + 1] > macaulay_pseudopower(seq[j], j)) return false;
  }
  return true;
}

std::vector<LeafStratum> leaf_stratification(const Triangulation& t, const GaleDual& g) {
  const VectorConfiguration& v = t.configuration();
  if (&v != &g.configuration() && v.vectors() != g.configuration().vectors()) {
    fail(ErrorCode::DimensionMismatch, "Gale dual belongs to a different configuration");
  }
  const std::size_t k = 2 * g.m() + 1;
  std::vector<LeafStratum> out;
  for (const auto& tau : t.faces()) {
    const IndexSet comp = complement(tau, v.size());
    std::vector<Vector> cols;
    for (std::size_t j : comp) cols.push_back(g.lambda_hat(j));
    const RationalBounds rb = rational_bounds(kernel_basis(Matrix::from_columns(cols, k)));
    LeafStratum s;
    s.simplex = tau;
    s.b = comp.size() - rb.c;
    s.c = comp.size() - rb.b;
    if (!(s.b <= k && k <= s.c && s.c <= comp.size())) {
      fail(ErrorCode::InternalInconsistency, "stratum of " + format_index_set(tau) + " violates b <= 2m+1 <= c");
    }
    s.torus_rank = s.b - 1;
    s.euclidean_rank = k - s.b;
    s.closure_torus_rank = s.c - 1;
    s.is_closed = s.b == k;
    if (s.is_closed != (s.c == k)) fail(ErrorCode::InternalInconsistency, "closed leaf with c != 2m+1");
    out.push_back(std::move(s));
  }
  const auto measures = rationality_measures(v);
  const auto& generic = out.front();
  if (!generic.simplex.empty() || generic.b != measures.b || generic.c != measures.c) {
    fail(ErrorCode::InternalInconsistency, "generic stratum disagrees with the rationality measures of V");
  }
  return out;
}

std::string leaf_space_class_name(LeafSpaceClass c) {
  switch (c) {
    case LeafSpaceClass::RationalOrbifold:
      return "rational-orbifold";
    case LeafSpaceClass::TotallyNonrationalCorners:
      return "totally-nonrational-corners";
    case LeafSpaceClass::Intermediate:
      return "intermediate";
  }
  return "intermediate";
}

LeafSpaceClass classify_leaf_space(const std::vector<LeafStratum>& strata, std::size_t m, std::size_t n) {
  for (const auto& s : strata) {
    if (s.simplex.empty() && s.c == 2 * m + 1) return LeafSpaceClass::RationalOrbifold;
  }
  for (const auto& s : strata) {
    if (s.c != n - s.simplex.size()) return LeafSpaceClass::Intermediate;
  }
  return LeafSpaceClass::TotallyNonrationalCorners;
}

std::size_t a_invariant(const VectorConfiguration& v) { return v.size() - rationality_measures(v).c; }

bool closed_strata_lattice_check(const std::vector<LeafStratum>& strata, const Triangulation& t) {
  std::map<IndexSet, bool> closed;
  for (const auto& s : strata) closed[s.simplex] = s.is_closed;
  const auto is_closed = [&](const IndexSet& s) {
    auto it = closed.find(s);
    if (it == closed.end()) fail(ErrorCode::InternalInconsistency, "missing stratum for " + format_index_set(s));
    return it->second;
  };
  for (const auto& e : t.maximal()) {
    std::vector<IndexSet> facets;
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      IndexSet f;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k != skip) f.push_back(e[k]);
      }
      if (is_closed(f)) facets.push_back(f);
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << facets.size()); ++mask) {
      IndexSet meet = e;
      for (std::size_t h = 0; h < facets.size(); ++h) {
        if (mask & (std::size_t{1} << h)) meet = set_intersection(meet, facets[h]);
      }
      if (!is_closed(meet)) return false;
    }
  }
  for (const auto& [a, ca] : closed) {
    if (!ca) continue;
    for (const auto& [b, cb] : closed) {
      if (!cb && is_subset(a, b)) return false;
    }
  }
  return true;
}

InvariantReport compute_invariants(const Triangulation& t, const GaleDual& g) {
  const VectorConfiguration& v = t.configuration();
  const std::size_t d = t.dimension();
  InvariantReport r;
  r.f_vector = t.f_vector();
  const RegularityResult reg = regularity_witness(t);
  r.regular = reg.regular;
  r.omega = reg.omega;
  r.shelling = find_shelling(t, reg.regular ? std::optional<Vector>(reg.omega) : std::nullopt);
  r.h_vector = h_vector_from_shelling(r.shelling, d);
  if (r.h_vector != h_vector_from_f(r.f_vector, d)) {
    fail(ErrorCode::InternalInconsistency, "h-vector from the shelling differs from the one given by f");
  }
  r.g_vector = g_vector(r.h_vector);
  r.basic_betti = basic_betti(r.h_vector);
  r.dehn_sommerville = dehn_sommerville_check(r.h_vector);
  r.g_nonnegative = std::all_of(r.g_vector.begin(), r.g_vector.end(), [](long x) { return x >= 0; });
  std::vector<long> seq{1};
  seq.insert(seq.end(), r.g_vector.begin(), r.g_vector.end());
  r.m_sequence_ok = m_sequence_check(seq);
  if (r.regular && !(r.g_nonnegative && r.m_sequence_ok)) {
    fail(ErrorCode::InternalInconsistency, "polytopal fan violates the g-theorem conditions");
  }
  r.strata = leaf_stratification(t, g);
  r.a_invariant = a_invariant(v);
  r.leaf_space_class = classify_leaf_space(r.strata, g.m(), v.size());
  return r;
}

}  // namespace fanforge
