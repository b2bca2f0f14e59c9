#include "doctest.h"

#include <random>

#include "goodsemi/duality.hpp"
#include "goodsemi/errors.hpp"
#include "goodsemi/metric.hpp"
#include "support/fixtures.hpp"
#include "support/random_good.hpp"

using namespace goodsemi;
using namespace goodsemi::fixtures;

TEST_CASE("chains in N^2") {
  const IdealFrame N2 = GoodSemigroup::natural(2).frame();
  CHECK(distance_between(N2, P(0, 0), P(2, 3)) == 5);
  const auto chains = all_saturated_chains(N2, P(0, 0), P(1, 1));
  CHECK(chains.size() == 2);
  for (const Chain& c : chains) CHECK(c.length() == 2);
  CHECK(distance_between(N2, P(1, 1), P(1, 1)) == 0);
}

TEST_CASE("chains in the curve semigroup") {
  const IdealFrame S = curve_S();
  // (0,0) < (3,1) < (4,1) < (4,2): the jump to (3,1) is a single step.
  CHECK(distance_between(S, P(0, 0), P(3, 1)) == 1);
  CHECK(distance_between(S, P(0, 0), P(4, 2)) == 3);
  CHECK(chain_lengths(S, P(0, 0), P(5, 3)) == std::set<std::size_t>{5});
  const auto c = smallest_cover(S, P(0, 0), P(4, 2));
  REQUIRE(c.has_value());
  CHECK(*c == P(3, 1));
}

TEST_CASE("frames without (E4) are detected") {
  const IdealFrame X = non_e4();
  CHECK(chain_lengths(X, P(0, 0), P(2, 2)) == std::set<std::size_t>{2, 3});
  CHECK_THROWS_AS(relative_distance_checked(X, X), PreconditionError);
}

TEST_CASE("chain enumeration respects its cap") {
  const IdealFrame N3 = GoodSemigroup::natural(3).frame();
  CHECK_THROWS_AS(all_saturated_chains(N3, Point{0, 0, 0}, Point{4, 4, 4}, 1000), BoundExceeded);
  CHECK(all_saturated_chains(N3, Point{0, 0, 0}, Point{1, 1, 1}).size() == 6);
}

TEST_CASE("relative distance on the curve fixtures") {
  const auto S = GoodSemigroup::certify(curve_S());
  const auto F = GoodIdeal::certify(curve_F(), S);
  const auto R = GoodIdeal::of(S);
  const auto C = GoodIdeal::certify(conductor_ideal(S.frame()), S);
  CHECK(relative_distance(F, C) == 1);
  CHECK_THROWS_AS(relative_distance(GoodIdeal::certify(curve_E(), S), R), PreconditionError);
  CHECK(relative_distance(F, R) == 2);
  CHECK(relative_distance(F, F) == 0);
  const auto K0 = canonical_normalized(S);
  CHECK(relative_distance(R, K0) == 2);
}

TEST_CASE("greedy distance equals the exhaustive oracle") {
  std::mt19937_64 rng(testing::suite_seed() + 20);
  int compared = 0;
  for (int round = 0; round < 40; ++round) {
    const std::size_t s = 1 + round % 3;
    const auto S = testing::random_semigroup(rng, s, s == 3 ? 4 : 7);
    const IdealFrame E = testing::random_ideal(rng, S, s == 3 ? 3 : 5).frame();
    try {
      const auto lengths = chain_lengths(E, E.mu(), E.gamma() + Point::ones(s), 200000);
      REQUIRE(lengths.size() == 1);
      CHECK(*lengths.begin() == distance_between(E, E.mu(), E.gamma() + Point::ones(s)));
      ++compared;
    } catch (const BoundExceeded&) {
    }
  }
  CHECK(compared > 20);
}
