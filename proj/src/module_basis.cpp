#include "goodsemi/module_basis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "goodsemi/errors.hpp"

namespace goodsemi {

// ---------------------------------------------------------------------------
// Layout

Layout::Layout(std::vector<int> lo_, std::vector<int> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw DimensionMismatch("layout bounds of different length");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (hi[i] < lo[i]) throw PreconditionError("layout with hi < lo");
}

Layout Layout::uniform(std::size_t s, int lo, int N) {
  return Layout(std::vector<int>(s, lo), std::vector<int>(s, N));
}

std::size_t Layout::size() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < dim(); ++i) n += width(i);
  return n;
}

std::size_t Layout::column(std::size_t branch, int exponent) const {
  if (exponent < lo.at(branch) || exponent >= hi[branch]) throw PreconditionError("exponent outside layout");
  std::size_t c = 0;
  for (std::size_t i = 0; i < branch; ++i) c += width(i);
  return c + static_cast<std::size_t>(exponent - lo[branch]);
}

std::pair<std::size_t, int> Layout::position(std::size_t column) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (column < width(i)) return {i, lo[i] + static_cast<int>(column)};
    column -= width(i);
  }
  throw PreconditionError("column outside layout");
}

RowVector Layout::dense(const SeriesVector& v) const {
  if (v.dim() != dim()) throw DimensionMismatch("series vector and layout differ in dimension");
  RowVector row(size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v.precision(i) < hi[i])
      throw PreconditionError("vector known only modulo t^" + std::to_string(v.precision(i)) + " in branch " +
                              std::to_string(i) + ", layout needs t^" + std::to_string(hi[i]));
    for (const auto& [e, c] : v.terms(i)) {
      if (e < lo[i]) throw PreconditionError("vector has a term below the layout: " + format(v));
      if (e < hi[i]) row[offset + static_cast<std::size_t>(e - lo[i])] = c;
    }
    offset += width(i);
  }
  return row;
}

SeriesVector Layout::series(const RowVector& row) const {
  SeriesVector out(dim());
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    const auto [i, e] = position(c);
    out.set(i, e, row[c]);
  }
  return out.truncated(hi);
}

// ---------------------------------------------------------------------------
// Echelon

RowVector Echelon::reduce(RowVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f == 0) continue;
    const RowVector& row = rows_[r];
    for (std::size_t c = pivots_[r]; c < width_; ++c)
      if (row[c] != 0) v[c] -= f * row[c];
  }
  return v;
}

bool Echelon::contains(const RowVector& v) const {
  const RowVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Echelon::insert(RowVector v) {
  if (v.size() != width_) throw DimensionMismatch("row of the wrong width");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t c = p; c < width_; ++c)
    if (v[c] != 0) v[c] *= inv;
  for (RowVector& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t c = p; c < width_; ++c)
      if (v[c] != 0) row[c] -= f * v[c];
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto k = at - pivots_.begin();
  pivots_.insert(at, p);
  rows_.insert(rows_.begin() + k, std::move(v));
  return true;
}

std::size_t Echelon::rank_from(std::size_t column) const {
  return static_cast<std::size_t>(pivots_.end() - std::lower_bound(pivots_.begin(), pivots_.end(), column));
}

std::vector<RowVector> nullspace(const std::vector<RowVector>& constraints, std::size_t unknowns) {
  Echelon e(unknowns);
  for (const RowVector& row : constraints) e.insert(row);
  std::vector<bool> pivot(unknowns, false);
  for (std::size_t p : e.pivots()) pivot[p] = true;
  std::vector<RowVector> out;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (pivot[f]) continue;
    RowVector c(unknowns);
    c[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) c[e.pivots()[r]] = -e.rows()[r][f];
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ModuleBasis

std::vector<SeriesVector> ModuleBasis::basis() const {
  std::vector<SeriesVector> out;
  for (const RowVector& row : echelon_.rows()) out.push_back(layout_.series(row));
  return out;
}

bool ModuleBasis::contains(const SeriesVector& v) const {
  return echelon_.contains(layout_.dense(v.truncated(layout_.hi)));
}

bool ModuleBasis::insert(const SeriesVector& v) { return echelon_.insert(layout_.dense(v.truncated(layout_.hi))); }

ModuleBasis ModuleBasis::widened(const Layout& wider) const {
  ModuleBasis out(wider);
  for (const SeriesVector& v : basis()) out.insert(v);
  out.generators_ = generators_;
  return out;
}

ModuleBasis span(const std::vector<SeriesVector>& ring, const std::vector<SeriesVector>& gens, int N) {
  if (gens.empty()) throw PreconditionError("span needs at least one generator");
  const std::size_t s = gens.front().dim();
  for (const SeriesVector& r : ring) {
    if (r.dim() != s) throw DimensionMismatch("ring generator has the wrong number of branches");
    for (std::size_t i = 0; i < s; ++i) {
      const auto o = r.order(i);
      if (o && *o < 1)
        throw PreconditionError("ring generator " + format(r) + " is not in the maximal ideal of branch " +
                                std::to_string(i));
    }
  }
  std::vector<int> lo(s, 0);
  for (const SeriesVector& g : gens) {
    if (g.dim() != s) throw DimensionMismatch("module generator has the wrong number of branches");
    for (std::size_t i = 0; i < s; ++i)
      if (const auto o = g.order(i)) lo[i] = std::min(lo[i], *o);
  }
  ModuleBasis E(Layout(lo, std::vector<int>(s, N)));
  E.set_generators(gens);
  std::deque<SeriesVector> todo;
  for (const SeriesVector& g : gens) {
    const SeriesVector v = g.truncated(N);
    if (E.insert(v)) todo.push_back(v);
  }
  while (!todo.empty()) {
    const SeriesVector v = todo.front();
    todo.pop_front();
    for (const SeriesVector& r : ring) {
      const SeriesVector w = (r * v).truncated(N);
      if (E.insert(w)) todo.push_back(w);
    }
  }
  return E;
}

// ---------------------------------------------------------------------------
// Filtration

namespace {

Point to_point(const std::vector<int>& v) { return Point(v); }

}  // namespace

FiltrationTable::FiltrationTable(const ModuleBasis& E)
    : box_(to_point(E.layout().lo), to_point(E.layout().hi)), dims_(box_.size(), 0) {
  const Layout& L = E.layout();
  const std::size_t s = L.dim();
  const std::vector<RowVector>& rows = E.echelon().rows();

  // Thresholds on branches 1..s-1 are fixed per pass; branch 0 is read off
  // the pivots of one echelon form in a column order that puts the
  // constrained coordinates first, then branch 0 ascending.
  const Box rest = s == 1 ? Box(Point{0}, Point{0})
                          : Box(Point(std::vector<int>(L.lo.begin() + 1, L.lo.end())),
                                Point(std::vector<int>(L.hi.begin() + 1, L.hi.end())));
  for (const Point& c : rest.points()) {
    std::vector<std::size_t> order;
    order.reserve(L.size());
    std::vector<bool> used(L.size(), false);
    for (std::size_t i = 1; i < s; ++i)
      for (int e = L.lo[i]; e < c[i - 1]; ++e) order.push_back(L.column(i, e));
    const std::size_t constrained = order.size();
    for (int e = L.lo[0]; e < L.hi[0]; ++e) order.push_back(L.column(0, e));
    for (std::size_t k : order) used[k] = true;
    for (std::size_t k = 0; k < L.size(); ++k)
      if (!used[k]) order.push_back(k);

    Echelon ech(L.size());
    for (const RowVector& row : rows) {
      RowVector permuted(L.size());
      for (std::size_t k = 0; k < order.size(); ++k) permuted[k] = row[order[k]];
      ech.insert(std::move(permuted));
    }
    Point alpha(s, 0);
    for (std::size_t i = 1; i < s; ++i) alpha[i] = c[i - 1];
    for (int a0 = L.lo[0]; a0 <= L.hi[0]; ++a0) {
      alpha[0] = a0;
      dims_[box_.index(alpha)] = ech.rank_from(constrained + static_cast<std::size_t>(a0 - L.lo[0]));
    }
  }
}

std::size_t FiltrationTable::at(const Point& alpha) const {
  // Below the layout the filtration is constant.
  return dims_[box_.index(cmax(cmin(alpha, box_.hi), box_.lo))];
}

IdealFrame value_semigroup_ideal(const ModuleBasis& E) {
  if (E.rank() == 0) throw PreconditionError("the zero module has no values");
  const Layout& L = E.layout();
  const std::size_t s = L.dim();
  const FiltrationTable table(E);
  const Point lo = to_point(L.lo);
  const Point top = to_point(L.hi) - Point::ones(s);
  if (!leq(lo, top)) throw BoundExceeded("truncation leaves no room to read values");
  auto member = [&](const Point& alpha) {
    const std::size_t d = table.at(alpha);
    for (std::size_t i = 0; i < s; ++i)
      if (table.at(alpha + Point::unit(s, i)) >= d) return false;
    return true;
  };
  // At a truncation that is too small the scanned set need not even have a
  // minimum or a capping bound inside the box.
  std::optional<IdealFrame> scanned;
  try {
    scanned = IdealFrame::from_predicate(Box(lo, top), member);
  } catch (const PreconditionError& e) {
    throw BoundExceeded(std::string("value scan inconsistent at truncation ") + std::to_string(L.hi.front()) +
                        ": " + e.what());
  }
  const IdealFrame& frame = *scanned;
  if (!leq(frame.gamma(), top - Point::ones(s)))
    throw BoundExceeded("conductor not detected below the truncation (capping bound " + frame.gamma().to_string() +
                        ", truncation " + std::to_string(L.hi.front()) + ")");
  return frame;
}

// ---------------------------------------------------------------------------
// Colon, length

ModuleBasis colon(const ModuleBasis& K, const ModuleBasis& E, const Point& pole_bound) {
  const Layout& LK = K.layout();
  const std::size_t s = LK.dim();
  if (E.dim() != s || pole_bound.dim() != s) throw DimensionMismatch("colon of modules of different dimension");
  std::vector<int> xlo(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (pole_bound[i] < 0) throw PreconditionError("pole bound must be nonnegative");
    xlo[i] = -pole_bound[i];
  }
  const Layout X(xlo, LK.hi);
  const std::size_t n = X.size();

  std::vector<SeriesVector> unknowns;
  unknowns.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [i, e] = X.position(k);
    unknowns.push_back(SeriesVector::monomial(s, i, e));
  }

  std::vector<RowVector> constraints;
  for (const SeriesVector& g : E.generators()) {
    std::vector<int> lo(s), P(s);
    for (std::size_t i = 0; i < s; ++i) {
      const int og = g.order_or_precision(i);
      P[i] = std::min({LK.hi[i], std::min(kExact, X.hi[i] + og), g.precision(i) - pole_bound[i]});
      lo[i] = std::min({LK.lo[i], xlo[i] + og, P[i]});
      // Membership mod t^P only decides membership in K if K contains the
      // whole slice of order >= P.
      for (int e = std::max(P[i], LK.lo[i]); e < LK.hi[i]; ++e)
        if (!K.contains(SeriesVector::monomial(s, i, e)))
          throw BoundExceeded("colon: truncation too small for generator " + format(g) + " (branch " +
                              std::to_string(i) + " known to t^" + std::to_string(P[i]) + ")");
    }
    const Layout Lg(lo, P);
    Echelon Kp(Lg.size());
    for (const SeriesVector& row : K.basis()) Kp.insert(Lg.dense(row.truncated(P)));
    std::vector<RowVector> residuals;
    residuals.reserve(n);
    for (const SeriesVector& m : unknowns) residuals.push_back(Kp.reduce(Lg.dense((m * g).truncated(P))));
    for (std::size_t j = 0; j < Lg.size(); ++j) {
      RowVector row(n);
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        row[k] = residuals[k][j];
        any = any || row[k] != 0;
      }
      if (any) constraints.push_back(std::move(row));
    }
  }

  ModuleBasis out(X);
  for (const RowVector& c : nullspace(constraints, n)) out.insert(X.series(c));
  for (const SeriesVector& v : out.basis()) {
    for (std::size_t i = 0; i < s; ++i)
      if (v.coefficient(i, xlo[i]) != 0)
        throw BoundExceeded("colon: solutions reach the pole bound t^" + std::to_string(xlo[i]) + " in branch " +
                            std::to_string(i));
  }
  out.set_generators(out.basis());
  return out;
}

bool is_submodule(const ModuleBasis& E, const ModuleBasis& F) {
  if (E.layout().hi != F.layout().hi) throw PreconditionError("modules truncated at different orders");
  std::vector<int> lo(E.dim());
  for (std::size_t i = 0; i < E.dim(); ++i) lo[i] = std::min(E.layout().lo[i], F.layout().lo[i]);
  const ModuleBasis wide = F.widened(Layout(lo, F.layout().hi));
  for (const SeriesVector& v : E.basis())
    if (!wide.contains(v)) return false;
  return true;
}

long long length_quotient(const ModuleBasis& F, const ModuleBasis& E) {
  if (!is_submodule(E, F)) throw PreconditionError("length_quotient: E is not contained in F");
  return static_cast<long long>(F.rank()) - static_cast<long long>(E.rank());
}

std::vector<SeriesVector> product_generators(const std::vector<SeriesVector>& a, const std::vector<SeriesVector>& b) {
  std::vector<SeriesVector> out;
  for (const SeriesVector& x : a)
    for (const SeriesVector& y : b) out.push_back(x * y);
  return out;
}

}  // namespace goodsemi
