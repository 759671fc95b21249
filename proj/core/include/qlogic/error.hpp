#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when the error is not tied
/// to a particular line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal consistency check failed (a bug, not bad input).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlogic
