#include <algorithm>
#include <random>

#include "agrolattice/concepts.hpp"
#include "agrolattice/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace agro;
using agro::testing::named_triple;
using agro::testing::random_cube;
using agro::testing::tiny_cube;
using agro::testing::toy_cube;

TEST_CASE("slice concepts of a two-row slice") {
  const DataCube c = tiny_cube();
  const auto concepts = enumerate_slice_concepts(slice_at(c, 0));
  REQUIRE(concepts.size() == 2);
  CHECK(concepts[0] == DyadicConcept{IndexSet(2, {0}), IndexSet(2, {0, 1})});
  CHECK(concepts[1] == DyadicConcept{IndexSet(2, {0, 1}), IndexSet(2, {1})});
}

TEST_CASE("a full slice has a single concept") {
  const DataCube c = build_cube(AxisLabels({"A", "B"}, {"x", "y"}, {"t"}),
                                {{"A", "x", "t"}, {"A", "y", "t"}, {"B", "x", "t"}, {"B", "y", "t"}});
  const auto concepts = enumerate_slice_concepts(slice_at(c, 0));
  REQUIRE(concepts.size() == 1);
  CHECK(concepts[0].extent.is_full());
  CHECK(concepts[0].intent.is_full());
}

TEST_CASE("toy T1 slice contains ({L2, L3}, {J3, J5, J6})") {
  const DataCube c = toy_cube();
  const auto t = named_triple(c, {"L2", "L3"}, {"J3", "J5", "J6"}, {"T1"});
  const auto concepts = enumerate_slice_concepts(slice_at(c, 0));
  CHECK(std::find(concepts.begin(), concepts.end(), DyadicConcept{t.extent, t.intent}) != concepts.end());
}

TEST_CASE("formal concepts match a brute-force closure scan") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const DataCube c = random_cube(rng, 7);
    const FormalContext ctx = slice_at(c, 0).table;
    std::vector<DyadicConcept> brute;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ctx.num_objects()); ++m) {
      IndexSet objs(ctx.num_objects());
      for (std::size_t o = 0; o < ctx.num_objects(); ++o)
        if ((m >> o) & 1U) objs.insert(o);
      if (ctx.close_objects(objs) == objs) brute.push_back({objs, ctx.up(objs)});
    }
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_formal_concepts(ctx) == brute);
  }
}

TEST_CASE("toy triples include the published rows") {
  const DataCube c = toy_cube();
  const TripleSet ts = enumerate_agro_triples(c);
  CHECK(ts.contains(named_triple(c, {"L1"}, {"J2", "J3", "J4", "J5"}, {"T2", "T4"})));
  CHECK(ts.contains(named_triple(c, {"L2"}, {"J1", "J2", "J3", "J5"}, {"T2", "T3"})));
  CHECK(ts.contains(named_triple(c, {"L1", "L7"}, {"J2", "J4", "J5"}, {"T2", "T3"})));
  CHECK(ts.contains(named_triple(c, {"L2", "L3"}, {"J3", "J5", "J6"}, {"T1"})));
  CHECK_FALSE(ts.contains(named_triple(c, {"L1", "L3", "L5", "L8", "L9"}, {"J2", "J4"}, {"T3"})));
  CHECK(ts.contains(named_triple(c, {"L1", "L3", "L5", "L7", "L8", "L9"}, {"J2", "J4"}, {"T3"})));
}

TEST_CASE("tiny cube triples") {
  const DataCube c = tiny_cube();
  const TripleSet ts = enumerate_agro_triples(c);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == named_triple(c, {"A"}, {"x", "y"}, {"t1"}));
  CHECK(ts[1] == named_triple(c, {"A", "B"}, {"y"}, {"t1"}));
}

TEST_CASE("oracle on trivial cubes") {
  const DataCube single = build_cube(AxisLabels({"A"}, {"x"}, {"t1"}), {{"A", "x", "t1"}});
  const TripleSet one = oracle_enumerate(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == named_triple(single, {"A"}, {"x"}, {"t1"}));

  const DataCube empty = build_cube(AxisLabels({"A", "B"}, {"x"}, {"t1", "t2"}), {});
  CHECK(oracle_enumerate(empty).empty());
  CHECK(enumerate_agro_triples(empty).empty());
}

TEST_CASE("oracle budget") {
  std::mt19937_64 rng(1);
  const DataCube c = random_cube(rng, 3, 12, 12, 0.5);
  OracleOptions opts;
  opts.budget = 1U << 20;
  CHECK_THROWS_AS(oracle_enumerate(c, opts), BudgetExceeded);
  opts.budget = 1U << 24;
  CHECK_NOTHROW(oracle_enumerate(c, opts));
}

TEST_CASE("toy triples equal the oracle") {
  const DataCube c = toy_cube();
  CHECK(enumerate_agro_triples(c) == oracle_enumerate(c));
}

TEST_CASE("is_maximal_box") {
  const DataCube c = toy_cube();
  CHECK(is_maximal_box(c, named_triple(c, {"L1"}, {"J2", "J3", "J4", "J5"}, {"T2", "T4"})));
  CHECK_FALSE(is_maximal_box(c, named_triple(c, {"L1", "L3", "L5", "L8", "L9"}, {"J2", "J4"}, {"T3"})));
  // (L1, J1, T2) is not incident.
  CHECK_FALSE(is_maximal_box(c, named_triple(c, {"L1"}, {"J1"}, {"T2"})));
  CHECK_THROWS_AS(is_maximal_box(c, AgroTriple{IndexSet(3), IndexSet(6), IndexSet(4)}), AxisMismatch);
}

TEST_CASE("random cubes: oracle equivalence and triple invariants") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    const DataCube c = random_cube(rng, 6);
    const TripleSet ts = enumerate_agro_triples(c);
    CHECK(ts == oracle_enumerate(c));
    CHECK(ts == enumerate_agro_triples(reorient(c, Orientation::by_dimension)));
    CHECK(std::is_sorted(ts.begin(), ts.end()));

    std::vector<Cell> covered;
    for (const auto& t : ts) {
      CHECK(is_maximal_box(c, t));
      CHECK_FALSE(t.extent.empty());
      CHECK_FALSE(t.intent.empty());
      CHECK_FALSE(t.times.empty());
      t.times.for_each([&](std::size_t time) {
        const SliceContext s = slice_at(c, time);
        CHECK(t.intent.is_subset_of(slice_up(s, t.extent)));
      });
      t.extent.for_each([&](std::size_t l) {
        t.intent.for_each([&](std::size_t d) { t.times.for_each([&](std::size_t tt) { covered.push_back({l, d, tt}); }); });
      });
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    CHECK(covered == c.facts());
  }
}
