#include <algorithm>
#include <random>

#include "agrolattice/errors.hpp"
#include "agrolattice/rules.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace agro;
using agro::testing::named_triple;
using agro::testing::random_cube;
using agro::testing::toy_cube;

namespace {

IndexSet dims(const DataCube& c, std::vector<std::string> names) { return make_set(c.labels(), Axis::dimension, names); }
IndexSet times(const DataCube& c, std::vector<std::string> names) {
  return make_set(c.labels(), Axis::timestamp, names);
}

// Counts by direct cell lookups.
std::size_t brute_holders(const DataCube& c, const DimSet& j, const TimeSet& t) {
  std::size_t n = 0;
  for (std::size_t l = 0; l < c.num_locations(); ++l) {
    bool all = true;
    j.for_each([&](std::size_t d) { t.for_each([&](std::size_t tt) { all = all && c.contains(l, d, tt); }); });
    n += all ? 1 : 0;
  }
  return n;
}

const AssociationRule* find_rule(const RuleSet& rs, const DimSet& a, const DimSet& b, const TimeSet& t) {
  for (const auto& r : rs)
    if (r.antecedent == a && r.consequent == b && r.times == t) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("Ratio parsing and rendering") {
  CHECK(Ratio::parse("0.7") == Ratio{7, 10});
  CHECK(Ratio::parse("3/4") == Ratio{75, 100});
  CHECK(Ratio::parse("1") == Ratio{1, 1});
  CHECK(Ratio::parse("0") == Ratio{0, 5});
  CHECK(Ratio::parse(".25") == Ratio{1, 4});
  CHECK_THROWS_AS(Ratio::parse("abc"), Error);
  CHECK_THROWS_AS(Ratio::parse("1/0"), Error);
  CHECK_THROWS_AS(Ratio::parse(""), Error);

  CHECK(Ratio{6, 10}.fraction() == "6/10");
  CHECK(Ratio{6, 10}.decimal() == "0.600000");
  CHECK(Ratio{2, 3}.decimal() == "0.666667");
  CHECK(Ratio{1, 8}.decimal(2) == "0.13");
  CHECK(Ratio{1, 1}.decimal(1) == "1.0");
}

TEST_CASE("Ratio ordering is exact") {
  CHECK(Ratio{6, 10} < Ratio{7, 10});
  CHECK(Ratio{7, 10} <= Ratio{14, 20});
  CHECK(Ratio{7, 10} >= Ratio{14, 20});
  CHECK_FALSE(Ratio{7, 10} < Ratio{14, 20});
  CHECK(Ratio{3, 4} > Ratio{7, 10});
  // Doubles would call these equal.
  const Ratio a{1000000000000000000ULL, 3000000000000000001ULL};
  const Ratio b{1, 3};
  CHECK(a < b);
}

TEST_CASE("denominator names") {
  CHECK(parse_denominator("locations") == SupportDenominator::locations);
  CHECK(parse_denominator("dimensions") == SupportDenominator::dimensions);
  CHECK(denominator_name(SupportDenominator::dimensions) == "dimensions");
  CHECK_THROWS_AS(parse_denominator("cells"), Error);
}

TEST_CASE("rule from a single triple with a chosen target") {
  const DataCube c = toy_cube();
  const TripleSet ts({named_triple(c, {"L1"}, {"J2", "J3", "J4", "J5"}, {"T2", "T4"})});
  RuleOptions opts;
  opts.target_dims = dims(c, {"J5"});
  const RuleSet rs = generate_rules(c, ts, opts);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].antecedent == dims(c, {"J2", "J3", "J4"}));
  CHECK(rs[0].consequent == dims(c, {"J5"}));
  CHECK(rs[0].times == times(c, {"T2", "T4"}));
  const std::size_t both = brute_holders(c, dims(c, {"J2", "J3", "J4", "J5"}), times(c, {"T2", "T4"}));
  const std::size_t ante = brute_holders(c, dims(c, {"J2", "J3", "J4"}), times(c, {"T2", "T4"}));
  CHECK(rs[0].support == Ratio{both, 10});
  CHECK(rs[0].confidence == Ratio{both, ante});
}

TEST_CASE("singleton intents give no rules") {
  const DataCube c = toy_cube();
  const TripleSet ts({named_triple(c, {"L1", "L2", "L3", "L4", "L5", "L8", "L10"}, {"J5"}, {"T1"})});
  CHECK(generate_rules(c, ts).empty());
}

TEST_CASE("target_times restricts the qualifying triples") {
  const DataCube c = toy_cube();
  const TripleSet ts = enumerate_agro_triples(c);
  RuleOptions opts;
  opts.target_times = times(c, {"T2", "T3"});
  const RuleSet rs = generate_rules(c, ts, opts);
  CHECK_FALSE(rs.empty());
  for (const auto& r : rs) CHECK(opts.target_times->is_subset_of(r.times));
}

TEST_CASE("exact support and confidence of {J2} -> {J4} at T3") {
  const DataCube c = toy_cube();
  const RuleSet rs = generate_rules(c, enumerate_agro_triples(c));
  const auto* r = find_rule(rs, dims(c, {"J2"}), dims(c, {"J4"}), times(c, {"T3"}));
  REQUIRE(r != nullptr);
  CHECK(r->support == Ratio{6, 10});
  CHECK(r->support.fraction() == "6/10");
  CHECK(r->confidence.fraction() == "6/8");
  CHECK(support(c, *r, SupportDenominator::dimensions).fraction() == "6/6");
  CHECK(support(c, *r, SupportDenominator::locations).fraction() == "6/10");
  CHECK(confidence(c, *r).fraction() == "6/8");
  CHECK(holder_count(c, dims(c, {"J2"}), times(c, {"T3"})) == 8);
}

TEST_CASE("undefined confidence") {
  const DataCube c = build_cube(AxisLabels({"A"}, {"x", "y"}, {"t1", "t2"}), {{"A", "x", "t1"}, {"A", "y", "t1"}});
  AssociationRule r{IndexSet(2, {0}), IndexSet(2, {1}), IndexSet(2, {1}), {}, {}, 0};
  CHECK_THROWS_AS(confidence(c, r), UndefinedConfidence);
  CHECK(support(c, r, SupportDenominator::locations) == Ratio{0, 1});
}

TEST_CASE("filter_rules thresholds are inclusive minimums") {
  const DataCube c = toy_cube();
  const RuleSet all = generate_rules(c, enumerate_agro_triples(c));
  CHECK(filter_rules(all, Ratio{0, 1}, Ratio{0, 1}).size() == all.size());
  const RuleSet full = filter_rules(all, Ratio{1, 1}, Ratio{0, 1});
  for (const auto& r : full) CHECK(r.support == Ratio{1, 1});
  const Ratio cut{6, 10};
  const RuleSet kept = filter_rules(all, cut, Ratio{6, 8});
  CHECK(find_rule(kept, dims(c, {"J2"}), dims(c, {"J4"}), times(c, {"T3"})) != nullptr);
  CHECK(find_rule(filter_rules(all, Ratio{61, 100}, Ratio{0, 1}), dims(c, {"J2"}), dims(c, {"J4"}),
                  times(c, {"T3"})) == nullptr);
}

TEST_CASE("RuleSet dedupes and sorts") {
  AssociationRule a{IndexSet(3, {0}), IndexSet(3, {1}), IndexSet(2, {0}), {1, 2}, {1, 2}, 4};
  AssociationRule b{IndexSet(3, {0}), IndexSet(3, {2}), IndexSet(2, {0}), {1, 2}, {1, 2}, 1};
  const RuleSet rs({b, a, a});
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].same_rule(a));
  CHECK(rs[1].same_rule(b));
}

TEST_CASE("rule properties on random cubes") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const DataCube c = random_cube(rng, 6);
    const TripleSet ts = enumerate_agro_triples(c);
    const RuleSet rs = generate_rules(c, ts);
    const RuleSet rd = generate_rules(c, ts, RuleOptions{std::nullopt, std::nullopt, SupportDenominator::dimensions});
    CHECK(rs.size() == rd.size());
    for (std::size_t k = 1; k < rs.size(); ++k) CHECK(rule_less(rs[k - 1], rs[k]));

    std::size_t expected = 0;
    for (const auto& t : ts)
      if (t.intent.size() > 1) expected += t.intent.size();
    CHECK(rs.size() <= expected);

    for (const auto& r : rs) {
      const DimSet both = r.antecedent | r.consequent;
      const std::size_t nb = brute_holders(c, both, r.times);
      const std::size_t na = brute_holders(c, r.antecedent, r.times);
      CHECK(r.consequent.size() == 1);
      CHECK_FALSE(r.antecedent.intersects(r.consequent));
      CHECK(r.support == Ratio{nb, c.num_locations()});
      CHECK(r.confidence == Ratio{nb, na});
      CHECK(r.confidence >= r.support);
      CHECK(nb > 0);
      const AgroTriple& src = ts[r.source_triple];
      CHECK(src.intent == both);
      CHECK(src.times == r.times);
    }
    for (const auto& r : rd) CHECK(r.support == Ratio{brute_holders(c, r.antecedent | r.consequent, r.times), c.num_dimensions()});

    // Raising a threshold never adds rules.
    const RuleSet loose = filter_rules(rs, Ratio{1, 10}, Ratio{1, 2});
    const RuleSet tight = filter_rules(rs, Ratio{3, 10}, Ratio{3, 4});
    for (const auto& r : tight) CHECK(std::any_of(loose.begin(), loose.end(), [&](const auto& x) { return x.same_rule(r); }));
  }
}
