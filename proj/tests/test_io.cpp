#include "doctest.h"

#include <random>

#include "goodsemi/duality.hpp"
#include "goodsemi/errors.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/plot.hpp"
#include "support/fixtures.hpp"
#include "support/paths.hpp"
#include "support/random_good.hpp"

using namespace goodsemi;
using namespace goodsemi::fixtures;

TEST_CASE("ideal files are byte stable and round-trip") {
  const std::string text = write_ideal(curve_EF());
  CHECK(text ==
        "{\n  \"s\": 2,\n  \"mu\": [5,2],\n  \"gamma\": [7,3],\n  \"frame\": [[5,2],[5,3],[6,2],[6,3],[7,3]]\n}\n");
  CHECK(read_ideal(text) == curve_EF());
  std::mt19937_64 rng(testing::suite_seed() + 30);
  for (int k = 0; k < 20; ++k) {
    const auto S = testing::random_semigroup(rng, 1 + k % 3, 6);
    const IdealFrame K0 = canonical_normalized(S).frame();
    const std::string once = write_ideal(K0);
    CHECK(read_ideal(once) == K0);
    CHECK(write_ideal(read_ideal(once)) == once);
  }
}

TEST_CASE("fixture files load") {
  CHECK(load_ideal(fixture_path("two_branch_S.json")) == curve_S());
  CHECK(load_ideal(fixture_path("nongood_dual_K0.json")) == panel_K0());
  CHECK(load_ideal(fixture_path("nongood_dual_double_dual.json")) == panel_double_dual());
  CHECK(load_ideal(fixture_path("non_e4.json")) == non_e4());
}

TEST_CASE("ideal file errors carry positions") {
  auto where = [](const std::string& text) {
    try {
      read_ideal(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line(), e.column()};
    }
    return std::pair<int, int>{0, 0};
  };
  CHECK(where("{\"s\": 2,\n \"mu\": [0,0] \"gamma\": [1,1]}") == std::pair<int, int>{2, 20});
  CHECK(where("{\"s\": 2, \"mu\": [0,0],\n\"gamma\": [1,1,1], \"frame\": []}") == std::pair<int, int>{2, 1});
  CHECK(where("{\"s\": 2, \"mu\": [0,0], \"gamma\": [1,1], \"frame\": [[0,0]]}").first == 1);
  CHECK(where("{\"s\": 2, \"mu\": [0,0], \"gamma\": [1,1], \"frame\": [[0,0],[1,1]], \"x\": 1}") ==
        std::pair<int, int>{1, 63});
  CHECK(where("[1,2]") == std::pair<int, int>{1, 1});
  CHECK(where("{\"s\": 2, \"mu\": [0,0], \"gamma\": [1,1]}") == std::pair<int, int>{1, 1});
}

TEST_CASE("points parse in several spellings") {
  CHECK(parse_point("[3,1]") == P(3, 1));
  CHECK(parse_point(" ( -2 , 4 ) ") == P(-2, 4));
  CHECK(parse_point("7") == Point{7});
  CHECK(write_point(P(-1, 0)) == "[-1,0]");
  CHECK_THROWS_AS(parse_point("[1,2"), ParseError);
  CHECK_THROWS_AS(parse_point("1,,2"), ParseError);
}

TEST_CASE("ascii plot of the two-branch semigroup") {
  const std::string want =
      "S\n"
      "3 | . . . # # #\n"
      "2 | . . . # # #\n"
      "1 | . . . # # #\n"
      "0 | # . . . . .\n"
      "  +------------\n"
      "    0 1 2 3 4 5\n";
  CHECK(ascii_plot(curve_S(), default_plot(curve_S(), "S")) == want);
  const IdealFrame N3 = GoodSemigroup::natural(3).frame();
  CHECK_THROWS_AS(default_plot(N3), PreconditionError);
}

TEST_CASE("svg plot marks members filled") {
  const std::string svg = svg_plot(curve_S(), default_plot(curve_S()));
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t filled = 0, hollow = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) {
    const std::string tag = svg.substr(at, svg.find("/>", at) - at);
    (tag.find("fill=\"black\"") != std::string::npos ? filled : hollow) += 1;
  }
  // Window [0,5] x [0,3]: (0,0) plus the 3 x 3 block at (3,1).
  CHECK(filled == 10);
  CHECK(hollow == 14);
  CHECK(svg == svg_plot(curve_S(), default_plot(curve_S())));
}
