#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgate {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero, mixing elements of different fields, and similar misuse
// of the algebra.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

  // Re-anchors an error raised on a sub-string at its position in the
  // enclosing document.
  ParseError relocated(std::size_t line, std::size_t column_offset) const;

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that is mathematically inconsistent with what the
// operation requires (wrong homology, relators not killed, bad deficiency).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pgate
