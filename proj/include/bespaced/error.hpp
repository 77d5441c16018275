#ifndef BESPACED_ERROR_HPP
#define BESPACED_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bespaced {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a constructor invariant (TimeInterval t1 > t2, Prob outside [0,1]).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An operator received an invariant outside the fragment it is defined on
/// (e.g. a model that is not in guarded normal form).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operator parameters are unusable: empty time window, non-positive step,
/// unreachable stop box.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed document text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed text whose structure does not describe an invariant
/// (unknown op, missing or mistyped field).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace bespaced

#endif  // BESPACED_ERROR_HPP
