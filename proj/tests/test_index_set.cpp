#include <algorithm>
#include <random>

#include "agrolattice/index_set.hpp"
#include "doctest.h"
#include "support.hpp"

using agro::IndexSet;

TEST_CASE("membership, size and iteration order") {
  IndexSet s(130, {129, 3, 64, 3});
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK_FALSE(s.contains(500));
  CHECK(s.members() == std::vector<std::size_t>{3, 64, 129});
  s.erase(64);
  CHECK(s.members() == std::vector<std::size_t>{3, 129});
  CHECK_THROWS_AS(s.insert(130), std::out_of_range);
}

TEST_CASE("full and empty sets respect the universe") {
  CHECK(IndexSet::full(70).size() == 70);
  CHECK(IndexSet::full(0).empty());
  CHECK(IndexSet(5).empty());
  CHECK(IndexSet::full(64).is_full());
}

TEST_CASE("set algebra") {
  IndexSet a(10, {1, 2, 3});
  IndexSet b(10, {2, 3, 4});
  CHECK((a & b) == IndexSet(10, {2, 3}));
  CHECK((a | b) == IndexSet(10, {1, 2, 3, 4}));
  CHECK((a - b) == IndexSet(10, {1}));
  CHECK(IndexSet(10, {2}).is_strict_subset_of(a));
  CHECK_FALSE(a.is_strict_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(a.agrees_below(IndexSet(10, {1, 2, 9}), 3));
  CHECK_FALSE(a.agrees_below(IndexSet(10, {1, 2, 9}), 4));
}

TEST_CASE("operator< is lexicographic over ascending members") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t universe = 1 + rng() % 150;
    const IndexSet a = agro::testing::random_subset(rng, universe, 0.1);
    const IndexSet b = agro::testing::random_subset(rng, universe, 0.1);
    const auto ma = a.members();
    const auto mb = b.members();
    CHECK((a < b) == std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end()));
    CHECK((a == b) == (ma == mb));
  }
  // Prefix sorts first.
  CHECK(IndexSet(4, {0}) < IndexSet(4, {0, 1}));
  CHECK(IndexSet(4, {0, 3}) < IndexSet(4, {1}));
}
