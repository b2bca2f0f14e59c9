#include "goodsemi/point.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "goodsemi/errors.hpp"

namespace goodsemi {

Point Point::unit(std::size_t dim, std::size_t i) {
  Point p(dim, 0);
  p[i] = 1;
  return p;
}

Point Point::operator+(const Point& other) const {
  Point out = *this;
  out += other;
  return out;
}

Point& Point::operator+=(const Point& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point Point::operator-(const Point& other) const {
  require_same_dim(*this, other);
  Point out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

Point Point::operator-() const {
  Point out = *this;
  for (int& c : out.coords_) c = -c;
  return out;
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dimension mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

bool leq(const Point& a, const Point& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lt(const Point& a, const Point& b) { return leq(a, b) && a != b; }

Point cmin(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Point cmax(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

long long coordinate_sum(const Point& p) {
  long long sum = 0;
  for (int c : p.coords()) sum += c;
  return sum;
}

Box::Box(Point lo_, Point hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!leq(lo, hi)) {
    throw PreconditionError("box corners out of order: " + lo.to_string() + " > " + hi.to_string());
  }
}

bool Box::contains(const Point& p) const { return leq(lo, p) && leq(p, hi); }

std::size_t Box::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim(); ++i) n *= width(i);
  return n;
}

std::size_t Box::index(const Point& p) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    idx = idx * width(i) + static_cast<std::size_t>(p[i] - lo[i]);
  }
  return idx;
}

Point Box::point_at(std::size_t index) const {
  Point p = lo;
  for (std::size_t i = dim(); i-- > 0;) {
    const std::size_t w = width(i);
    p[i] = lo[i] + static_cast<int>(index % w);
    index /= w;
  }
  return p;
}

std::vector<Point> Box::points() const {
  std::vector<Point> out;
  const std::size_t n = size();
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(point_at(k));
  return out;
}

std::vector<Point> delta_region(const Point& alpha, const BranchSet& J, const Box& box) {
  require_same_dim(alpha, box.lo);
  std::vector<bool> fixed(alpha.dim(), false);
  for (std::size_t j : J) {
    if (j >= alpha.dim()) throw DimensionMismatch("branch index out of range in delta_region");
    fixed[j] = true;
  }
  Point lo = box.lo;
  Point hi = box.hi;
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    if (fixed[i]) {
      lo[i] = std::max(lo[i], alpha[i]);
      hi[i] = std::min(hi[i], alpha[i]);
    } else {
      lo[i] = std::max(lo[i], alpha[i] + 1);
    }
    if (lo[i] > hi[i]) return {};
  }
  return Box(lo, hi).points();
}

}  // namespace goodsemi
