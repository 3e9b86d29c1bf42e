#include "doctest.h"
#include "corpus.hpp"
#include "support.hpp"

#include "fanforge/invariants.hpp"

#include <map>
#include <set>

using namespace fanforge;
using fanforge::testing::error_code_of;
using fanforge::testing::S;

namespace {

Triangulation square_fan() {
  auto v = normalize_configuration(VectorConfiguration(2, testing::square_rays(), 0));
  return validate_triangulation(v, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

Triangulation line_fan(const Scalar& a, const Scalar& b) {
  auto inst = testing::line_instance("line", a, b);
  return validate_triangulation(inst.config, inst.maximal);
}

const LeafStratum& stratum(const std::vector<LeafStratum>& strata, const IndexSet& s) {
  for (const auto& x : strata) {
    if (x.simplex == s) return x;
  }
  FAIL("no stratum for " << format_index_set(s));
  return strata.front();
}

Triangulation octahedral_fan() {
  auto t = testing::sqrt_table();
  std::vector<Scalar> scale(6, Scalar(1));
  scale[4] = Scalar::symbol(t, 0);
  auto inst = testing::octahedral_instance("octahedral", scale);
  return validate_triangulation(inst.config, inst.maximal);
}

}  // namespace

TEST_CASE("shellings of the square fan") {
  auto t = square_fan();
  auto s = shelling_from_order(t, {0, 1, 2, 3});
  CHECK(s.indices == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(s.restrictions == std::vector<IndexSet>{{}, {3}, {4}, {1, 4}});
  CHECK(h_vector_from_shelling(s, 2) == HVector{1, 2, 1});

  CHECK(error_code_of([&] { shelling_from_order(t, {0, 2, 1, 3}); }) == ErrorCode::InvalidShelling);
  CHECK(error_code_of([&] { shelling_from_order(t, {0, 1, 2}); }) == ErrorCode::InvalidShelling);
  CHECK(error_code_of([&] { shelling_from_order(t, {0, 1, 1, 3}); }) == ErrorCode::InvalidShelling);

  auto found = find_shelling(t, Vector(5, Scalar(1)));
  CHECK(h_vector_from_shelling(found, 2) == HVector{1, 2, 1});
  CHECK(found.indices.front() == 0);
  auto searched = find_shelling(t);
  CHECK(h_vector_from_shelling(searched, 2) == HVector{1, 2, 1});

  // The square fan has 4 starting cones, each extended clockwise or counterclockwise twice.
  CHECK(enumerate_shellings(t).size() == 16);

  CHECK(error_code_of([&] { find_shelling(t, Vector{Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(0)}); }) ==
        ErrorCode::NotATriangulation);
}

TEST_CASE("shellings of CP1 and the hexagon") {
  auto cp1 = line_fan(Scalar(1), Scalar(1));
  auto s = find_shelling(cp1);
  CHECK(s.indices == std::vector<std::size_t>{0, 1});
  CHECK(h_vector_from_shelling(s, 1) == HVector{1, 1});

  auto hex = testing::polygon_instance("hexagon", testing::hexagon_rays());
  auto t = validate_triangulation(hex.config, hex.maximal);
  auto cyclic = shelling_from_order(t, {0, 1, 2, 3, 4, 5});
  CHECK(cyclic.indices == std::vector<std::size_t>{0, 1, 1, 1, 1, 2});
  CHECK(h_vector_from_shelling(cyclic, 2) == HVector{1, 4, 1});
}

TEST_CASE("h-vectors from f-vectors") {
  CHECK(h_vector_from_f({1, 4, 4}, 2) == HVector{1, 2, 1});
  CHECK(h_vector_from_f({1, 2}, 1) == HVector{1, 1});
  CHECK(h_vector_from_f({1, 6, 6}, 2) == HVector{1, 4, 1});
  CHECK(h_vector_from_f({1, 6, 12, 8}, 3) == HVector{1, 3, 3, 1});
  CHECK(error_code_of([] { h_vector_from_f({1, 2}, 2); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Betti numbers, Dehn-Sommerville and the g-vector") {
  CHECK(basic_betti({1, 1}) == std::vector<long>{1, 0, 1});
  CHECK(basic_betti({1, 2, 1}) == std::vector<long>{1, 0, 2, 0, 1});
  CHECK(basic_betti({1, 4, 1}) == std::vector<long>{1, 0, 4, 0, 1});

  CHECK(dehn_sommerville_check({1, 2, 1}));
  CHECK_FALSE(dehn_sommerville_check({1, 3, 2}));
  CHECK(g_vector({1, 2, 1}) == std::vector<long>{1});
  CHECK(g_vector({1, 1}).empty());
  CHECK(g_vector({1, 5, 9, 5, 1}) == std::vector<long>{4, 4});

  CHECK(m_sequence_check({1, 1}));
  CHECK_FALSE(m_sequence_check({1, 2, 4}));
  CHECK(m_sequence_check({1, 2, 3}));
  CHECK_FALSE(m_sequence_check({2, 1}));
  CHECK_FALSE(m_sequence_check({1, -1}));
}

TEST_CASE("Macaulay pseudopowers") {
  CHECK(macaulay_pseudopower(2, 1) == 3);
  CHECK(macaulay_pseudopower(0, 3) == 0);
  CHECK(macaulay_pseudopower(1, 1) == 1);
  CHECK(macaulay_pseudopower(4, 1) == 10);
  // 5 = C(3,2) + C(2,1), so 5^<2> = C(4,3) + C(3,2) = 7.
  CHECK(macaulay_pseudopower(5, 2) == 7);
  // 6 = C(4,2), so 6^<2> = C(5,3) = 10.
  CHECK(macaulay_pseudopower(6, 2) == 10);
  // Brute force: a^<j> is the largest count of degree j+1 monomials whose degree j shadow has size a.
  // For j = 1 this is C(a+1, 2).
  for (long a = 0; a < 30; ++a) CHECK(macaulay_pseudopower(a, 1) == a * (a + 1) / 2);
}

TEST_CASE("leaf strata of CP1") {
  auto rational = line_fan(Scalar(1), Scalar(1));
  auto strata = leaf_stratification(rational, compute_gale_dual(rational.configuration()));
  REQUIRE(strata.size() == 3);
  const auto& top = stratum(strata, {1});
  CHECK(top.b == 3);
  CHECK(top.c == 3);
  CHECK(top.is_closed);
  CHECK(top.torus_rank == 2);
  CHECK(classify_leaf_space(strata, 1, 4) == LeafSpaceClass::RationalOrbifold);
  CHECK(a_invariant(rational.configuration()) == 1);

  auto t = testing::sqrt_table();
  VectorConfiguration v(1, {Vector{S(t, "s")}, Vector{Scalar(-1)}, Vector{S(t, "1 - s")}, Vector{Scalar(0)}}, 2);
  auto irr = validate_triangulation(v, {{1}, {2}});
  auto is = leaf_stratification(irr, compute_gale_dual(v));
  const auto& generic = stratum(is, {});
  CHECK(generic.b == 2);
  CHECK(generic.c == 4);
  CHECK(generic.torus_rank == 1);
  CHECK(generic.euclidean_rank == 1);
  CHECK(generic.closure_torus_rank == 3);
  CHECK_FALSE(generic.is_closed);
  for (const IndexSet& s : {IndexSet{1}, IndexSet{2}}) {
    CHECK(stratum(is, s).b == 3);
    CHECK(stratum(is, s).c == 3);
    CHECK(stratum(is, s).is_closed);
  }
  CHECK(classify_leaf_space(is, 1, 4) == LeafSpaceClass::TotallyNonrationalCorners);
  CHECK(a_invariant(v) == 0);
  CHECK(closed_strata_lattice_check(is, irr));
}

TEST_CASE("octahedral fan with one irrational axis") {
  auto t = octahedral_fan();
  const auto& v = t.configuration();
  CHECK(v.size() == 8);
  auto g = compute_gale_dual(v);
  CHECK(g.m() == 2);
  auto strata = leaf_stratification(t, g);
  const auto& generic = stratum(strata, {});
  CHECK(generic.b == 4);
  CHECK(generic.c == 6);
  CHECK(classify_leaf_space(strata, 2, 8) == LeafSpaceClass::Intermediate);
  CHECK(a_invariant(v) == 2);
  CHECK(closed_strata_lattice_check(strata, t));

  // Some maximal cone has two closed facets, so the intersection lemma is exercised.
  std::size_t best = 0;
  for (const auto& e : t.maximal()) {
    std::size_t closed = 0;
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      IndexSet f;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k != skip) f.push_back(e[k]);
      }
      closed += stratum(strata, f).is_closed ? 1 : 0;
    }
    best = std::max(best, closed);
  }
  CHECK(best >= 2);
  CHECK(stratum(strata, {1, 5}).is_closed);
  CHECK(stratum(strata, {5}).is_closed);
  CHECK_FALSE(stratum(strata, {1, 3}).is_closed);
  CHECK_FALSE(stratum(strata, {1}).is_closed);

  auto report = compute_invariants(t, g);
  CHECK(report.h_vector == HVector{1, 3, 3, 1});
  CHECK(report.basic_betti == std::vector<long>{1, 0, 3, 0, 3, 0, 1});
}

TEST_CASE("closed_strata_lattice_check detects violations") {
  auto t = square_fan();
  auto strata = leaf_stratification(t, compute_gale_dual(t.configuration()));
  CHECK(closed_strata_lattice_check(strata, t));
  // Closing the generic stratum alone breaks upward closure.
  for (auto& s : strata) {
    if (s.simplex.size() == 1) s.is_closed = false;
  }
  CHECK_FALSE(closed_strata_lattice_check(strata, t));
}

TEST_CASE("a non-regular fan is shelled by search") {
  const std::vector<std::pair<long, long>> tri{{1, 0}, {-1, 1}, {0, -1}};
  std::vector<Vector> rays;
  for (long h : {1L, -1L}) {
    for (const auto& [x, y] : tri) rays.push_back(Vector{Scalar(x), Scalar(y), Scalar(h)});
  }
  auto v = normalize_configuration(VectorConfiguration(3, rays, 0));
  std::vector<IndexSet> maximal{{1, 2, 3}, {4, 5, 6}};
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::size_t next = i % 3 + 1;
    IndexSet upper{i, next, next + 3};
    IndexSet lower{i, i + 3, next + 3};
    std::sort(upper.begin(), upper.end());
    std::sort(lower.begin(), lower.end());
    maximal.push_back(upper);
    maximal.push_back(lower);
  }
  auto t = validate_triangulation(v, maximal);
  auto report = compute_invariants(t, compute_gale_dual(v));
  CHECK_FALSE(report.regular);
  CHECK(report.h_vector == HVector{1, 3, 3, 1});
  CHECK(report.dehn_sommerville);
  CHECK(report.leaf_space_class == LeafSpaceClass::RationalOrbifold);
}

TEST_CASE("shelling independence on polygon fans") {
  std::mt19937_64 rng(7);
  for (std::size_t k = 3; k <= 6; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      auto inst = testing::polygon_instance("polygon", testing::random_polygon_rays(rng, k));
      auto t = validate_triangulation(inst.config, inst.maximal);
      const HVector expected = h_vector_from_f(t.f_vector(), 2);
      const auto all = enumerate_shellings(t);
      CHECK(all.size() == k * (std::size_t{1} << (k - 2)));
      for (const auto& s : all) CHECK(h_vector_from_shelling(s, 2) == expected);
    }
  }
}

TEST_CASE("invariant properties over the corpus") {
  for (const auto& inst : testing::desk_corpus(40, 51)) {
    INFO(inst.name);
    auto t = validate_triangulation(inst.config, inst.maximal);
    auto g = compute_gale_dual(inst.config);
    auto r = compute_invariants(t, g);
    const std::size_t d = t.dimension();
    CHECK(r.regular);
    CHECK(r.h_vector == h_vector_from_f(t.f_vector(), d));
    CHECK(r.basic_betti.back() == 1);
    CHECK(r.dehn_sommerville);
    CHECK(r.g_nonnegative);
    CHECK(r.m_sequence_ok);
    CHECK(closed_strata_lattice_check(r.strata, t));

    const std::size_t k = 2 * g.m() + 1;
    std::map<IndexSet, const LeafStratum*> by;
    for (const auto& s : r.strata) by[s.simplex] = &s;
    for (const auto& e : t.maximal()) {
      CHECK(by.at(e)->b == k);
      CHECK(by.at(e)->c == k);
    }
    for (const auto& [a, sa] : by) {
      for (const auto& [b, sb] : by) {
        if (!is_subset(a, b)) continue;
        CHECK(sa->b <= sb->b);
        CHECK(sb->b <= k);
        CHECK(k <= sb->c);
        CHECK(sb->c <= sa->c);
      }
    }
  }
}

TEST_CASE("Betti numbers depend only on the combinatorial type") {
  auto t = testing::sqrt_table();
  auto rational = line_fan(Scalar(1), Scalar(1));
  auto irrational = line_fan(Scalar::symbol(t, 0), Scalar(1));
  auto a = compute_invariants(rational, compute_gale_dual(rational.configuration()));
  auto b = compute_invariants(irrational, compute_gale_dual(irrational.configuration()));
  CHECK(a.basic_betti == std::vector<long>{1, 0, 1});
  CHECK(a.basic_betti == b.basic_betti);
  CHECK(a.leaf_space_class != b.leaf_space_class);
}
