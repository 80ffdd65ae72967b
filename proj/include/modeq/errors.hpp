#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modeq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or partition text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration or construction exceeded its size guard.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// A state or size that is not an object of the requested regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Tuple arity or claim arity mismatch.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A search gave up before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace modeq
