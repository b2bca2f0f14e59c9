#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "goodsemi/ideal.hpp"

namespace goodsemi {

inline constexpr std::size_t kDefaultChainCap = 1'000'000;

/// Saturated chain alpha = p_0 < ... < p_n = beta; consecutive points have no
/// member of the ideal strictly between them.
struct Chain {
  std::vector<Point> points;
  std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
};

/// Lexicographically smallest member delta of E with from < delta <= to.
/// Such a delta is minimal, hence consecutive to `from`.
std::optional<Point> smallest_cover(const IdealFrame& E, const Point& from, const Point& to);

/// d_E(alpha, beta): length of a greedy saturated chain. E must satisfy (E4),
/// which every good ideal does.
std::size_t distance_between(const IdealFrame& E, const Point& alpha, const Point& beta);

/// d(F \ E) = d_F(mu^F, gamma^E) - d_E(mu^E, gamma^E) for good E in F.
long long relative_distance(const GoodIdeal& E, const GoodIdeal& F);

/// Same formula for frames that are not certified good. Both chain lengths are
/// first checked for (E4) with all_saturated_chains; throws
/// PreconditionError if they are not unique.
long long relative_distance_checked(const IdealFrame& E, const IdealFrame& F, std::size_t cap = kDefaultChainCap);

/// Every saturated chain from alpha to beta in E. Throws BoundExceeded once
/// more than `cap` chains exist.
std::vector<Chain> all_saturated_chains(const IdealFrame& E, const Point& alpha, const Point& beta,
                                        std::size_t cap = kDefaultChainCap);

/// Distinct lengths among all saturated chains; (E4) holds on [alpha, beta]
/// iff the result has one element.
std::set<std::size_t> chain_lengths(const IdealFrame& E, const Point& alpha, const Point& beta,
                                    std::size_t cap = kDefaultChainCap);

}  // namespace goodsemi
