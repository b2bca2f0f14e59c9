#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace goodsemi {

/// An element of Z^s. Branch indices are 0..s-1.
///
/// The built-in ordering operators are lexicographic and exist only so that
/// points can be kept in sorted containers and serialized deterministically.
/// Every mathematical comparison goes through leq()/lt() (componentwise).
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim, int value = 0) : coords_(dim, value) {}
  Point(std::initializer_list<int> coords) : coords_(coords) {}
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}

  static Point zero(std::size_t dim) { return Point(dim, 0); }
  static Point ones(std::size_t dim) { return Point(dim, 1); }
  static Point unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;
  Point operator-() const;
  Point& operator+=(const Point& other);

  bool is_zero() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Throws DimensionMismatch unless a and b have the same length.
void require_same_dim(const Point& a, const Point& b);

/// Componentwise a <= b.
bool leq(const Point& a, const Point& b);
/// Componentwise a <= b and a != b.
bool lt(const Point& a, const Point& b);

Point cmin(const Point& a, const Point& b);
Point cmax(const Point& a, const Point& b);

/// Sum of coordinates.
long long coordinate_sum(const Point& p);

/// Axis-parallel box [lo, hi] in Z^s.
struct Box {
  Point lo;
  Point hi;

  Box(Point lo_, Point hi_);

  std::size_t dim() const { return lo.dim(); }
  bool contains(const Point& p) const;
  /// Number of lattice points.
  std::size_t size() const;
  /// Extent along branch i.
  std::size_t width(std::size_t i) const { return static_cast<std::size_t>(hi[i] - lo[i] + 1); }
  /// Row-major index of p (last coordinate fastest); p must lie in the box.
  std::size_t index(const Point& p) const;
  Point point_at(std::size_t index) const;
  /// All lattice points in lexicographic order.
  std::vector<Point> points() const;
};

/// A subset of branch indices, kept sorted.
using BranchSet = std::vector<std::size_t>;

/// Delta_J(alpha) n box: beta_i == alpha_i for i in J, beta_j > alpha_j for
/// j outside J. With J == all branches the set is {alpha}.
std::vector<Point> delta_region(const Point& alpha, const BranchSet& J, const Box& box);

}  // namespace goodsemi
