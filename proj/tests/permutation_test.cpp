#include <doctest.h>

#include <numeric>
#include <random>

#include "mapcensus/error.hpp"
#include "mapcensus/permutation.hpp"
#include "test_support.hpp"

using namespace mapcensus;

TEST_CASE("permutation validates its image table") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  CHECK_THROWS_AS(Permutation({1, 2, 3}), Error);
  CHECK_THROWS_AS(Permutation({-1, 0}), Error);
  CHECK_NOTHROW(Permutation({1, 0, 2}));
}

TEST_CASE("identity and composition") {
  const Permutation id = Permutation::identity(4);
  for (int d = 0; d < 4; ++d) CHECK(id(d) == d);

  const Permutation p({1, 2, 0, 3});
  CHECK(compose(p, p.inverse()) == Permutation::identity(4));
  CHECK(compose(p.inverse(), p) == Permutation::identity(4));

  // compose(a, b) applies b first
  const Permutation q({0, 1, 3, 2});
  const Permutation pq = compose(p, q);
  for (int d = 0; d < 4; ++d) CHECK(pq(d) == p(q(d)));
}

TEST_CASE("orbits are least-dart-first and sorted") {
  const Permutation p({1, 0, 3, 4, 2, 5});  // (0 1)(2 3 4)(5)
  const auto orbits = p.orbits();
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<Dart>{0, 1});
  CHECK(orbits[1] == std::vector<Dart>{2, 3, 4});
  CHECK(orbits[2] == std::vector<Dart>{5});
  CHECK(p.orbit_count() == 3);
}

TEST_CASE("involution and fixed-point predicates") {
  CHECK(Permutation({1, 0, 3, 2}).is_involution());
  CHECK(Permutation({1, 0, 3, 2}).is_fixed_point_free());
  CHECK(Permutation({0, 1}).is_involution());
  CHECK_FALSE(Permutation({0, 1}).is_fixed_point_free());
  CHECK_FALSE(Permutation({1, 2, 0}).is_involution());
}

TEST_CASE("inverse round-trips on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation p = mapcensus::testing::random_permutation(rng, 12);
    CHECK(p.inverse().inverse() == p);
    CHECK(p.orbit_count() == p.inverse().orbit_count());
  }
}
