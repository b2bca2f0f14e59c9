#pragma once

#include <stdexcept>
#include <string>

namespace goodsemi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two lattice objects live in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (bad box, endpoint outside
/// the ideal, missing certificate, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An object failed an axiom check that the caller required to pass.
class NotGood : public Error {
 public:
  using Error::Error;
};

/// A finite computation could not be completed inside its configured bound
/// (truncation order, scan box, pole bound, enumeration cap).
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input. Carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace goodsemi
