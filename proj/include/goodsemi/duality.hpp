#pragma once

#include "goodsemi/ideal.hpp"

namespace goodsemi {

/// E - F = { alpha : alpha + F in E }. Requires the result to have a
/// minimum, which holds when E satisfies (E1).
IdealFrame difference(const IdealFrame& E, const IdealFrame& F);

/// C_E = E - N^s = gamma^E + N^s.
IdealFrame conductor_ideal(const IdealFrame& E);

/// K^0_S = { alpha : Delta^S(tau - alpha) is empty }, computed by
/// Delta-emptiness scans over [0, gamma].
GoodIdeal canonical_normalized(const GoodSemigroup& S);

/// K^0_S - E via the Delta criterion { alpha : Delta^E(tau - alpha) = empty }.
/// Independent of difference(); both routes must agree.
IdealFrame canonical_difference(const GoodSemigroup& S, const IdealFrame& E);

/// A canonical ideal K = shift + K^0_S of a fixed S.
class CanonicalIdeal {
 public:
  static CanonicalIdeal normalized(const GoodSemigroup& S);
  /// Throws NotGood unless K is canonical for S.
  static CanonicalIdeal certify(const GoodIdeal& K, const GoodSemigroup& S);

  const GoodIdeal& ideal() const { return ideal_; }
  const IdealFrame& frame() const { return ideal_.frame(); }
  const Point& shift_from_normalized() const { return shift_; }
  CanonicalIdeal shifted(const Point& alpha) const;

 private:
  CanonicalIdeal(GoodIdeal ideal, Point shift) : ideal_(std::move(ideal)), shift_(std::move(shift)) {}
  GoodIdeal ideal_;
  Point shift_;
};

struct CanonicityVerdict {
  bool canonical;
  /// gamma^K - gamma; K = shift + K^0_S when canonical.
  Point shift;
};

CanonicityVerdict is_canonical(const GoodIdeal& K, const GoodSemigroup& S);

/// S = K^0_S.
bool is_symmetric(const GoodSemigroup& S);

/// K - E for a certified good E; the result is good again and
/// dualize(K, dualize(K, E)) == E.
GoodIdeal dualize(const CanonicalIdeal& K, const GoodIdeal& E, const GoodSemigroup& S);

/// K' = K - S' for a good semigroup S in S' in N^s; canonical over S'.
CanonicalIdeal push_forward(const CanonicalIdeal& K, const GoodSemigroup& S, const GoodSemigroup& larger);

/// Product of the factors' normalized canonical ideals.
IdealFrame product_canonical(const LocalDecomposition& decomposition);

}  // namespace goodsemi
