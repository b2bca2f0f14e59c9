#pragma once

// Frames used across the unit tests.

#include <vector>

#include "goodsemi/ideal.hpp"

namespace goodsemi::fixtures {

inline Point P(int a, int b) { return Point{a, b}; }

inline IdealFrame frame(Point mu, Point gamma, std::vector<Point> pts) {
  return IdealFrame::from_points(mu, gamma, pts);
}

// Two-branch curve with value semigroup {0} u ((3,1) + N^2).
inline IdealFrame curve_S() { return frame(P(0, 0), P(3, 1), {P(0, 0), P(3, 1)}); }
// The figure's version of E; the module's value set ends at (5,2) instead.
inline IdealFrame curve_E_figure() { return frame(P(2, 1), P(4, 2), {P(2, 1), P(2, 2), P(3, 1), P(4, 2)}); }
inline IdealFrame curve_E() { return frame(P(2, 1), P(5, 2), {P(2, 1), P(2, 2), P(3, 1), P(5, 2)}); }
inline IdealFrame curve_F() { return frame(P(3, 1), P(4, 2), {P(3, 1), P(4, 2)}); }
inline IdealFrame curve_EF() {
  return frame(P(5, 2), P(7, 3), {P(5, 2), P(6, 2), P(5, 3), P(6, 3), P(7, 3)});
}

// Semigroup with a non-good dual pair.
inline IdealFrame panel_S() {
  return frame(P(0, 0), P(8, 6), {P(0, 0), P(3, 2), P(5, 4), P(6, 4), P(5, 6), P(8, 6)});
}
inline IdealFrame panel_E() {
  return frame(P(1, 2), P(7, 5), {P(1, 2), P(2, 2), P(3, 2), P(4, 4), P(5, 4), P(6, 4), P(6, 5), P(7, 5)});
}
inline IdealFrame panel_K0() {
  return frame(P(0, 0), P(8, 6),
               {P(0, 0), P(0, 1), P(0, 2), P(0, 3), P(0, 4), P(0, 5), P(0, 6), P(1, 0), P(1, 1),
                P(3, 0), P(3, 2), P(3, 3), P(3, 4), P(3, 5), P(3, 6), P(4, 0), P(4, 2), P(4, 3),
                P(5, 0), P(5, 2), P(5, 4), P(5, 5), P(5, 6), P(6, 0), P(6, 2), P(6, 4), P(6, 5),
                P(6, 6), P(7, 0), P(7, 2), P(7, 4), P(7, 5), P(8, 0), P(8, 2), P(8, 4), P(8, 6)});
}
inline IdealFrame panel_K0_minus_E() {
  return frame(P(4, 2), P(7, 4), {P(4, 2), P(4, 3), P(5, 2), P(6, 2), P(7, 2), P(7, 4)});
}
inline IdealFrame panel_double_dual() {
  return frame(P(1, 2), P(7, 5),
               {P(1, 2), P(2, 2), P(3, 2), P(4, 4), P(4, 5), P(5, 4), P(5, 5), P(6, 4), P(6, 5), P(7, 4), P(7, 5)});
}

// Not good: (E4) fails, saturated chains from (0,0) to (2,2) have lengths 2 and 3.
inline IdealFrame non_e4() { return frame(P(0, 0), P(2, 2), {P(0, 0), P(1, 0), P(2, 0), P(0, 2), P(2, 2)}); }

}  // namespace goodsemi::fixtures
