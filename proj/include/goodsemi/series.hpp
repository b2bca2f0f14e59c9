#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goodsemi/point.hpp"

namespace goodsemi {

using Rational = mpq_class;

/// Precision marker for components that are exact polynomials.
inline constexpr int kExact = 1 << 28;

/// Element of Q((t_1)) x ... x Q((t_s)) known modulo t_i^{precision(i)} in
/// branch i. Only nonzero coefficients below the precision are stored, so a
/// branch can be known to vanish up to its precision without being zero.
class SeriesVector {
 public:
  SeriesVector() = default;
  /// The zero vector, exact.
  explicit SeriesVector(std::size_t s, int precision = kExact);

  static SeriesVector monomial(std::size_t s, std::size_t branch, int exponent, const Rational& c = 1,
                               int precision = kExact);
  /// (1, ..., 1).
  static SeriesVector one(std::size_t s);

  std::size_t dim() const { return terms_.size(); }
  int precision(std::size_t branch) const { return precision_[branch]; }
  bool exact() const;
  const std::map<int, Rational>& terms(std::size_t branch) const { return terms_[branch]; }
  Rational coefficient(std::size_t branch, int exponent) const;
  void set(std::size_t branch, int exponent, const Rational& c);

  /// Order of the lowest nonzero coefficient; empty when the branch vanishes
  /// up to its precision (infinite value as far as is known).
  std::optional<int> order(std::size_t branch) const;
  /// Lowest exponent that may carry a nonzero coefficient: the order, or the
  /// precision when the branch vanishes so far.
  int order_or_precision(std::size_t branch) const;
  /// Every branch has a known finite order.
  bool is_regular() const;
  /// nu(x); throws PreconditionError unless regular.
  Point value() const;
  bool is_zero() const;

  /// Drops everything at or above t_i^{p_i} and lowers the precision to p_i.
  SeriesVector truncated(int precision) const;
  SeriesVector truncated(const std::vector<int>& precision) const;

  SeriesVector operator+(const SeriesVector& o) const;
  SeriesVector operator-(const SeriesVector& o) const;
  SeriesVector operator-() const;
  SeriesVector operator*(const Rational& c) const;
  /// Branchwise product. The precision in branch i is
  /// min(p_a + ord_b, p_b + ord_a).
  SeriesVector operator*(const SeriesVector& o) const;

  /// Equal terms and equal precision.
  friend bool operator==(const SeriesVector& a, const SeriesVector& b) {
    return a.precision_ == b.precision_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::map<int, Rational>> terms_;
  std::vector<int> precision_;
};

/// Canonical text of an exact vector: "(-t^4, t)". Terms in ascending
/// exponent, coefficients in lowest terms, "0" for a vanishing branch.
/// Truncated vectors get a trailing "+ O(t^p)" per inexact branch.
std::string format(const SeriesVector& v);
/// Vectors joined by " ; ".
std::string format(const std::vector<SeriesVector>& vs);

/// Parses the format above (whitespace is free, '*' optional, exponents may
/// be negative). `line` and `column_offset` position ParseError diagnostics.
std::vector<SeriesVector> parse_series_list(std::string_view text, int line = 1, int column_offset = 0);
SeriesVector parse_series(std::string_view text, int line = 1, int column_offset = 0);

}  // namespace goodsemi
