#pragma once

#include <stdexcept>
#include <string>

namespace hopfcyc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a chain space would exceed the configured dimension budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An operator that must restrict (or descend) to a sub/quotient module did not.
class RestrictionError : public Error {
 public:
  using Error::Error;
};

/// A presentation whose normal-form basis grows past the saturation bound.
class NotFiniteDimensional : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed.  Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hopfcyc
