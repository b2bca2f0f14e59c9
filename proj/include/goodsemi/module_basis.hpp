#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "goodsemi/ideal.hpp"
#include "goodsemi/series.hpp"

namespace goodsemi {

using RowVector = std::vector<Rational>;

/// Coordinates of truncated vectors: branch i carries the exponents
/// [lo_i, hi_i). Columns are ordered branch-major, then by exponent.
struct Layout {
  std::vector<int> lo;
  std::vector<int> hi;

  Layout() = default;
  Layout(std::vector<int> lo_, std::vector<int> hi_);
  /// [lo, N) in every branch.
  static Layout uniform(std::size_t s, int lo, int N);

  std::size_t dim() const { return lo.size(); }
  std::size_t size() const;
  std::size_t width(std::size_t branch) const { return static_cast<std::size_t>(hi[branch] - lo[branch]); }
  std::size_t column(std::size_t branch, int exponent) const;
  std::pair<std::size_t, int> position(std::size_t column) const;

  /// Coordinates of v. Throws PreconditionError if v has a nonzero
  /// coefficient below lo or is not known up to hi.
  RowVector dense(const SeriesVector& v) const;
  /// The vector with these coordinates, known modulo t^hi.
  SeriesVector series(const RowVector& row) const;

  friend bool operator==(const Layout&, const Layout&) = default;
};

/// Reduced row echelon basis of a subspace of Q^n: pivots strictly
/// increasing, monic, and zero in every other row.
class Echelon {
 public:
  explicit Echelon(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<RowVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivots; zero iff v is in the span.
  RowVector reduce(RowVector v) const;
  bool contains(const RowVector& v) const;
  /// Adds v to the span; returns false if it was already there.
  bool insert(RowVector v);
  /// Number of rows whose pivot is at or after `column`, i.e. the dimension
  /// of the subspace vanishing on the first `column` coordinates.
  std::size_t rank_from(std::size_t column) const;

 private:
  std::size_t width_;
  std::vector<RowVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of { c : sum_k c_k columns_k = 0 }, given the constraint matrix by
/// rows of length `unknowns`.
std::vector<RowVector> nullspace(const std::vector<RowVector>& constraints, std::size_t unknowns);

/// A finite-dimensional Q-subspace of a truncated product of power series
/// together with the generators it was built from. The space represents a
/// module E containing t^hi (Q[[t_1]] x ... x Q[[t_s]]), stored modulo that
/// slice.
class ModuleBasis {
 public:
  explicit ModuleBasis(Layout layout) : layout_(std::move(layout)), echelon_(layout_.size()) {}

  const Layout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.dim(); }
  /// Q-dimension of E / t^hi.
  std::size_t rank() const { return echelon_.rank(); }
  const Echelon& echelon() const { return echelon_; }
  /// Echelon rows as series known modulo t^hi.
  std::vector<SeriesVector> basis() const;
  /// Module generators; colon() imposes its conditions on these only.
  const std::vector<SeriesVector>& generators() const { return generators_; }
  void set_generators(std::vector<SeriesVector> gens) { generators_ = std::move(gens); }

  bool contains(const SeriesVector& v) const;
  bool insert(const SeriesVector& v);

  /// The same space in a wider layout.
  ModuleBasis widened(const Layout& wider) const;

 private:
  Layout layout_;
  Echelon echelon_;
  std::vector<SeriesVector> generators_;
};

/// Smallest Q-space containing `gens` and stable under multiplication by the
/// ring generators, modulo t^N. Ring generators need positive order in every
/// branch where they do not vanish.
ModuleBasis span(const std::vector<SeriesVector>& ring, const std::vector<SeriesVector>& gens, int N);

/// dim E^alpha = dim { x in E : nu(x) >= alpha } (modulo t^hi) for alpha in
/// [lo, hi].
class FiltrationTable {
 public:
  explicit FiltrationTable(const ModuleBasis& E);
  const Box& box() const { return box_; }
  std::size_t at(const Point& alpha) const;

 private:
  Box box_;
  std::vector<std::size_t> dims_;
};

/// Gamma_E: alpha is a value iff dim E^alpha > dim E^{alpha + e_i} for every
/// branch i. Scans [lo, hi - 1]; throws BoundExceeded unless the capping
/// bound found lies at or below hi - 2, and PreconditionError for the zero
/// module.
IdealFrame value_semigroup_ideal(const ModuleBasis& E);

/// { x : x g in K for every generator g of E } with x ranging over
/// t^{-pole_bound} Q[t] modulo t^N, N being K's truncation. Throws
/// BoundExceeded if some solution reaches the pole bound or if K does not
/// contain the slice needed to decide membership at the available precision.
ModuleBasis colon(const ModuleBasis& K, const ModuleBasis& E, const Point& pole_bound);

/// dim_Q F/E for E contained in F (both modulo the same t^N). Throws
/// PreconditionError if E is not a subspace of F.
long long length_quotient(const ModuleBasis& F, const ModuleBasis& E);

/// E is a subspace of F.
bool is_submodule(const ModuleBasis& E, const ModuleBasis& F);

/// Pairwise products of generators.
std::vector<SeriesVector> product_generators(const std::vector<SeriesVector>& a, const std::vector<SeriesVector>& b);

}  // namespace goodsemi
