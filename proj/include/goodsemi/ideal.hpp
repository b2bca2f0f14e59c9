#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "goodsemi/point.hpp"

namespace goodsemi {

/// Finite representation of a subset E of Z^s that has a minimum mu and a
/// capping bound gamma:
///
///     alpha in E  <=>  min(alpha, gamma) in E n [mu, gamma].
///
/// Only the points of the box [mu, gamma] are stored. On construction gamma is
/// lowered to the least bound for which the rule above still describes the
/// same set, so two frames compare equal exactly when they describe the same
/// subset of Z^s. For good ideals that least bound is the conductor gamma^E.
class IdealFrame {
 public:
  /// Frame from explicit points of [mu, gamma]. Requires mu and gamma to be
  /// listed and every point to lie in the box.
  static IdealFrame from_points(const Point& mu, const Point& gamma, const std::vector<Point>& points);

  /// Frame of {alpha : member(alpha)} where every member lies above box.lo and
  /// box.hi is a valid capping bound of the set. The predicate is evaluated on
  /// the box only.
  static IdealFrame from_predicate(const Box& box, const std::function<bool(const Point&)>& member);

  /// alpha + N^s.
  static IdealFrame principal(const Point& alpha);

  std::size_t dim() const { return mu_.dim(); }
  const Point& mu() const { return mu_; }
  const Point& gamma() const { return gamma_; }
  Box frame_box() const { return Box(mu_, gamma_); }

  bool contains(const Point& alpha) const;

  /// Members of [mu, gamma], lexicographically sorted.
  std::vector<Point> frame() const;
  std::size_t frame_size() const;

  friend bool operator==(const IdealFrame& a, const IdealFrame& b) {
    return a.mu_ == b.mu_ && a.gamma_ == b.gamma_ && a.bits_ == b.bits_;
  }

 private:
  IdealFrame(Point mu, Point gamma, std::vector<std::uint8_t> bits);
  bool bit(const Point& p) const { return bits_[frame_box().index(p)] != 0; }
  bool capping_valid(const Point& c) const;
  void normalize();

  Point mu_;
  Point gamma_;
  std::vector<std::uint8_t> bits_;
};

/// Members of E inside the box, lexicographically sorted.
std::vector<Point> members_in(const IdealFrame& E, const Box& box);

/// E is a subset of F.
bool is_subset(const IdealFrame& E, const IdealFrame& F);

/// alpha + E.
IdealFrame shift(const IdealFrame& E, const Point& alpha);

/// First member of Delta_J(alpha) n E in lexicographic order, if any. The
/// search is finite: coordinates outside J only range up to gamma^E (or
/// alpha_j + 1 when that is larger) because E is constant above its bound.
std::optional<Point> find_in_delta(const IdealFrame& E, const Point& alpha, const BranchSet& J);

/// Delta^E(alpha) = union over i of Delta_i(alpha) n E is empty.
bool delta_empty(const IdealFrame& E, const Point& alpha);

/// The conductor gamma^E = min { alpha : alpha + N^s in E }. Requires that
/// this set has a minimum, which holds under (E1).
Point conductor(const IdealFrame& E);

enum class Axiom { Closure, E0, E1, E2 };

std::string to_string(Axiom axiom);

/// One failed instance of an axiom. For Closure the pair is (e, sigma) with
/// e + sigma outside E; for E1 it is (alpha, beta) with min outside E; for E2
/// it is (alpha, beta) together with the branch j of equality.
struct Witness {
  Axiom axiom;
  Point first;
  Point second;
  std::optional<std::size_t> branch;

  std::string describe() const;
};

struct ValidationReport {
  bool closure = true;
  bool e0 = true;
  bool e1 = true;
  bool e2 = true;
  /// Upper corner of the region in which (E2) witnesses epsilon were sought.
  Point e2_search_cap;
  std::vector<Witness> witnesses;
  std::size_t failure_count = 0;

  bool passes() const { return closure && e0 && e1 && e2; }
  /// The min-capping representation is only proven exact for frames that
  /// satisfy (E1) and (E2); otherwise it is the definition of the set.
  bool representation_certified() const { return e1 && e2; }
  std::string summary() const;
};

class GoodSemigroup;

/// (E0), (E1), (E2) for E; closure is not checked.
ValidationReport validate_axioms(const IdealFrame& E);
/// Axioms plus the ideal condition E + S in E.
ValidationReport validate(const IdealFrame& E, const GoodSemigroup& S);
/// Axioms plus 0 in S, S >= 0 and S + S in S.
ValidationReport validate_semigroup(const IdealFrame& S);

/// A frame certified to be a good semigroup.
class GoodSemigroup {
 public:
  /// Throws NotGood if validate_semigroup fails.
  static GoodSemigroup certify(const IdealFrame& frame);
  static GoodSemigroup natural(std::size_t s);
  /// Numerical semigroup generated by the given positive integers (gcd 1).
  static GoodSemigroup numerical(const std::vector<int>& generators);

  const IdealFrame& frame() const { return frame_; }
  std::size_t dim() const { return frame_.dim(); }
  const Point& gamma() const { return frame_.gamma(); }
  Point tau() const { return frame_.gamma() - Point::ones(dim()); }
  bool contains(const Point& alpha) const { return frame_.contains(alpha); }

  friend bool operator==(const GoodSemigroup& a, const GoodSemigroup& b) { return a.frame_ == b.frame_; }

 private:
  explicit GoodSemigroup(IdealFrame frame) : frame_(std::move(frame)) {}
  IdealFrame frame_;
};

/// A frame certified to be a good semigroup ideal of some S.
class GoodIdeal {
 public:
  /// Throws NotGood if validate(frame, S) fails.
  static GoodIdeal certify(const IdealFrame& frame, const GoodSemigroup& S);
  static GoodIdeal of(const GoodSemigroup& S) { return GoodIdeal(S.frame()); }

  const IdealFrame& frame() const { return frame_; }
  std::size_t dim() const { return frame_.dim(); }
  /// alpha + E is good whenever E is.
  GoodIdeal shifted(const Point& alpha) const { return GoodIdeal(shift(frame_, alpha)); }

  friend bool operator==(const GoodIdeal& a, const GoodIdeal& b) { return a.frame_ == b.frame_; }

 private:
  explicit GoodIdeal(IdealFrame frame) : frame_(std::move(frame)) {}
  IdealFrame frame_;
};

/// E + F = { e + f }. The result satisfies (E0); (E1) and (E2) may both fail,
/// even for good E and F.
IdealFrame sum(const IdealFrame& E, const IdealFrame& F);

/// No nonzero element of S has a zero coordinate.
bool is_local(const GoodSemigroup& S);

struct LocalDecomposition {
  std::vector<BranchSet> blocks;
  std::vector<GoodSemigroup> factors;
};

/// Projection of E onto the branches in `block` (in that order).
IdealFrame project(const IdealFrame& E, const BranchSet& block);

/// Product of frames, factor k living on branches blocks[k]. The blocks must
/// partition 0..s-1.
IdealFrame cartesian_product(const std::vector<IdealFrame>& factors, const std::vector<BranchSet>& blocks);

/// Splits S into local factors: branches i and j share a block iff every
/// element of S vanishes on i exactly when it vanishes on j.
LocalDecomposition decompose(const GoodSemigroup& S);

}  // namespace goodsemi
