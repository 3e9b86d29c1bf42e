#include "doctest.h"
#include "corpus.hpp"
#include "support.hpp"

#include "fanforge/configuration.hpp"
#include "fanforge/error.hpp"

#include <random>

using namespace fanforge;
using fanforge::testing::Q;
using fanforge::testing::S;
using fanforge::testing::vec;

namespace {

VectorConfiguration line(std::vector<Scalar> xs, std::size_t ghosts = 0) {
  std::vector<Vector> vectors;
  for (auto& x : xs) vectors.push_back(Vector{x});
  return VectorConfiguration(1, std::move(vectors), ghosts);
}

}  // namespace

TEST_CASE("relation_space examples") {
  CHECK(relation_space(line({Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}, 2)).dim() == 3);

  const auto rel = relation_space(line({Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)}));
  CHECK(rel.dim() == 3);
  CHECK(rel.contains(Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(rel.contains(Vector{Scalar(1), Scalar(0), Scalar(-1), Scalar(0)}));
  CHECK(rel.contains(Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}));

  VectorConfiguration basis(2, {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(1)}}, 0);
  CHECK(relation_space(basis).dim() == 0);
}

TEST_CASE("configuration validation") {
  CHECK(testing::error_code_of([] { line({Scalar(0), Scalar(0)}, 2); }) == ErrorCode::NotSpanning);
  CHECK(testing::error_code_of([] { line({Scalar(1), Scalar(0)}); }) == ErrorCode::InvalidConfiguration);
  CHECK(testing::error_code_of([] { VectorConfiguration(2, {Vector{Scalar(1)}}, 0); }) == ErrorCode::DimensionMismatch);
  CHECK(testing::error_code_of([] { VectorConfiguration(2, {Vector{Scalar(1), Scalar(2)}, Vector{Scalar(2), Scalar(4)}}, 0); }) ==
        ErrorCode::NotSpanning);
  CHECK(testing::error_code_of([] { line({Scalar(1)}, 2); }) == ErrorCode::InvalidConfiguration);

  auto v = line({Scalar(1), Scalar(-1), Scalar(1)}, 1);
  CHECK_FALSE(v.is_ghost(2));
  CHECK(v.is_ghost(3));
  CHECK(testing::error_code_of([&] { v.vector(4); }) == ErrorCode::IndexOutOfRange);
  CHECK(testing::error_code_of([&] { v.m(); }) == ErrorCode::NotNormalized);

  // Repeated vectors are allowed.
  CHECK(line({Scalar(1), Scalar(1), Scalar(-2)}).size() == 3);
}

TEST_CASE("rationality_measures examples") {
  auto r = rationality_measures(line({Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}, 2));
  CHECK(r.b == 3);
  CHECK(r.c == 3);

  auto t = testing::sqrt_table();
  auto irr = rationality_measures(line({S(t, "s"), Scalar(-1), S(t, "1 - s"), Scalar(0)}, 2));
  CHECK(irr.b == 2);
  CHECK(irr.c == 4);

  VectorConfiguration square(2,
                             {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(1)}, Vector{Scalar(-1), Scalar(0)},
                              Vector{Scalar(0), Scalar(-1)}, Vector{Scalar(0), Scalar(0)}},
                             1);
  auto sq = rationality_measures(square);
  CHECK(sq.b == 3);
  CHECK(sq.c == 3);
}

TEST_CASE("normalize_configuration steps") {
  auto a = normalize_configuration(line({Scalar(1), Scalar(-1)}));
  REQUIRE(a.size() == 4);
  CHECK(a.ghost_count() == 2);
  CHECK(a.vector(3) == Vector{Scalar(0)});
  CHECK(a.vector(4) == Vector{Scalar(0)});
  CHECK(a.m() == 1);

  auto b = normalize_configuration(line({Scalar(1)}));
  REQUIRE(b.size() == 4);
  CHECK(b.vector(2) == Vector{Scalar(-1)});
  CHECK(b.vector(3) == Vector{Scalar(0)});
  CHECK(b.ghost_count() == 3);

  VectorConfiguration square(2,
                             {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(1)}, Vector{Scalar(-1), Scalar(0)},
                              Vector{Scalar(0), Scalar(-1)}},
                             0);
  auto c = normalize_configuration(square);
  CHECK(c.size() == 5);
  CHECK(c.ghost_count() == 1);
  CHECK(c.m() == 1);

  // The balancing vector may be irrational; it stays a ghost.
  auto t = testing::sqrt_table();
  auto d = normalize_configuration(line({S(t, "s"), Scalar(-1)}));
  CHECK(d.vector(3) == Vector{S(t, "1 - s")});
  CHECK(d.size() == 4);
  CHECK(d.is_normalized());
}

TEST_CASE("quasilattice_info examples") {
  auto a = quasilattice_info(line({Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}, 2));
  CHECK(a.rank == 1);
  CHECK(a.is_lattice);

  auto t = testing::sqrt_table();
  auto b = quasilattice_info(line({S(t, "s"), Scalar(-1), S(t, "1 - s"), Scalar(0)}, 2));
  CHECK(b.rank == 2);
  CHECK_FALSE(b.is_lattice);
  CHECK(b.generator_count == 4);

  auto c = quasilattice_info(VectorConfiguration(2, {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(0), Scalar(1)}}, 0));
  CHECK(c.rank == 2);
  CHECK(c.is_lattice);
}

TEST_CASE("normalization properties over the corpus") {
  for (const auto& inst : testing::desk_corpus(60, 11)) {
    INFO(inst.name);
    const auto& v = inst.config;
    CHECK(v.is_normalized());
    CHECK(relation_space(v).contains(Vector(v.size(), Scalar(1))));
    auto again = normalize_configuration(v);
    CHECK(again.vectors() == v.vectors());
    CHECK(again.ghost_count() == v.ghost_count());
  }
}

TEST_CASE("rationality measures are invariant under unimodular maps") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> small(-2, 2);
  for (const auto& inst : testing::desk_corpus(60, 12)) {
    INFO(inst.name);
    const auto& v = inst.config;
    const std::size_t d = v.dimension();
    Matrix a = Matrix::identity(d);
    for (int step = 0; step < 4 && d > 1; ++step) {
      const std::size_t i = rng() % d;
      const std::size_t j = (i + 1 + rng() % (d - 1)) % d;
      const Scalar f(small(rng));
      for (std::size_t c = 0; c < d; ++c) a(i, c) += f * a(j, c);
    }
    if (rng() % 2) {
      for (std::size_t c = 0; c < d; ++c) a(0, c) = -a(0, c);
    }
    const auto before = rationality_measures(v);
    const auto after = rationality_measures(v.transformed(a));
    CHECK(before.b == after.b);
    CHECK(before.c == after.c);
  }
}

TEST_CASE("rational configurations are exactly the lattice ones") {
  for (const auto& inst : testing::desk_corpus(80, 13)) {
    INFO(inst.name);
    const auto& v = inst.config;
    const std::size_t rel = v.size() - v.dimension();
    const auto r = rationality_measures(v);
    const bool lattice = quasilattice_info(v).is_lattice;
    CHECK((r.b == rel) == (r.c == rel));
    CHECK((r.b == rel) == lattice);
    CHECK(r.b <= rel);
    CHECK(rel <= r.c);
    if (r.b < rel) CHECK(r.c >= r.b + 2);
  }
}
