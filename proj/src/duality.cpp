#include "goodsemi/duality.hpp"

#include "goodsemi/errors.hpp"

namespace goodsemi {

IdealFrame difference(const IdealFrame& E, const IdealFrame& F) {
  require_same_dim(E.mu(), F.mu());
  // alpha + mu^F in E forces alpha >= mu^E - mu^F; membership of alpha only
  // depends on min(alpha, gamma^E - mu^F).
  const Box candidates(E.mu() - F.mu(), E.gamma() - F.mu());
  return IdealFrame::from_predicate(candidates, [&](const Point& alpha) {
    // f only matters through min(f, gamma^E - alpha); F is constant above
    // its own bound, so f ranges over a finite box.
    const Box fs(F.mu(), cmax(cmax(E.gamma() - alpha, F.gamma()), F.mu()));
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const Point f = fs.point_at(k);
      if (F.contains(f) && !E.contains(alpha + f)) return false;
    }
    return true;
  });
}

IdealFrame conductor_ideal(const IdealFrame& E) { return IdealFrame::principal(conductor(E)); }

IdealFrame canonical_difference(const GoodSemigroup& S, const IdealFrame& E) {
  require_same_dim(S.gamma(), E.mu());
  const Point tau = S.tau();
  const Box candidates(Point::zero(S.dim()) - E.mu(), S.gamma() - E.mu());
  return IdealFrame::from_predicate(candidates, [&](const Point& alpha) { return delta_empty(E, tau - alpha); });
}

GoodIdeal canonical_normalized(const GoodSemigroup& S) {
  const Point tau = S.tau();
  const IdealFrame K = IdealFrame::from_predicate(Box(Point::zero(S.dim()), S.gamma()), [&](const Point& alpha) {
    return delta_empty(S.frame(), tau - alpha);
  });
  return GoodIdeal::certify(K, S);
}

CanonicalIdeal CanonicalIdeal::normalized(const GoodSemigroup& S) {
  return CanonicalIdeal(canonical_normalized(S), Point::zero(S.dim()));
}

CanonicalIdeal CanonicalIdeal::certify(const GoodIdeal& K, const GoodSemigroup& S) {
  const CanonicityVerdict verdict = is_canonical(K, S);
  if (!verdict.canonical) throw NotGood("ideal is not canonical for the semigroup");
  return CanonicalIdeal(K, verdict.shift);
}

CanonicalIdeal CanonicalIdeal::shifted(const Point& alpha) const {
  return CanonicalIdeal(ideal_.shifted(alpha), shift_ + alpha);
}

CanonicityVerdict is_canonical(const GoodIdeal& K, const GoodSemigroup& S) {
  require_same_dim(K.frame().mu(), S.gamma());
  const Point alpha = conductor(K.frame()) - S.gamma();
  const GoodIdeal K0 = canonical_normalized(S);
  return {shift(K0.frame(), alpha) == K.frame(), alpha};
}

bool is_symmetric(const GoodSemigroup& S) { return canonical_normalized(S).frame() == S.frame(); }

GoodIdeal dualize(const CanonicalIdeal& K, const GoodIdeal& E, const GoodSemigroup& S) {
  return GoodIdeal::certify(difference(K.frame(), E.frame()), S);
}

CanonicalIdeal push_forward(const CanonicalIdeal& K, const GoodSemigroup& S, const GoodSemigroup& larger) {
  if (!is_subset(S.frame(), larger.frame())) {
    throw PreconditionError("push_forward: S is not contained in the larger semigroup");
  }
  const IdealFrame pushed = difference(K.frame(), larger.frame());
  return CanonicalIdeal::certify(GoodIdeal::certify(pushed, larger), larger);
}

IdealFrame product_canonical(const LocalDecomposition& decomposition) {
  std::vector<IdealFrame> factors;
  for (const GoodSemigroup& S : decomposition.factors) factors.push_back(canonical_normalized(S).frame());
  return cartesian_product(factors, decomposition.blocks);
}

}  // namespace goodsemi
