#include "doctest.h"

#include <sstream>

#include "goodsemi/errors.hpp"
#include "goodsemi/point.hpp"

using namespace goodsemi;

TEST_CASE("point arithmetic and order") {
  const Point a{1, 5}, b{3, 2};
  CHECK(a + b == Point{4, 7});
  CHECK(a - b == Point{-2, 3});
  CHECK(-a == Point{-1, -5});
  CHECK(cmin(a, b) == Point{1, 2});
  CHECK(cmax(a, b) == Point{3, 5});
  CHECK(leq(Point{1, 2}, Point{1, 3}));
  CHECK_FALSE(leq(a, b));
  CHECK(lt(Point{0, 0}, Point{0, 1}));
  CHECK_FALSE(lt(a, a));
  CHECK(a < b);  // lexicographic
  CHECK(coordinate_sum(a) == 6);
  CHECK(Point::unit(3, 1) == Point{0, 1, 0});
  std::ostringstream os;
  os << Point{-1, 4};
  CHECK(os.str() == "(-1,4)");
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(Point({1, 2}) + Point({1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(cmin(Point{1}, Point{1, 2}), DimensionMismatch);
  CHECK_THROWS_AS(Box(Point{2, 0}, Point{1, 3}), PreconditionError);
}

TEST_CASE("box enumeration is lexicographic and indexable") {
  const Box box(Point{-1, 0}, Point{1, 2});
  CHECK(box.size() == 9);
  const auto pts = box.points();
  REQUIRE(pts.size() == 9);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    CHECK(box.index(pts[k]) == k);
    CHECK(box.point_at(k) == pts[k]);
  }
  CHECK(box.contains(Point{0, 2}));
  CHECK_FALSE(box.contains(Point{2, 0}));
}

TEST_CASE("delta region") {
  const Box box(Point{0, 0}, Point{3, 3});
  // Delta_{0}(1,1): first coordinate equal, second strictly above.
  const auto pts = delta_region(Point{1, 1}, BranchSet{0}, box);
  CHECK(pts == std::vector<Point>{Point{1, 2}, Point{1, 3}});
}
