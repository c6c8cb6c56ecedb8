#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvp {

/// Rejected input: zero dimension, dimension mismatch, out-of-range index.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed matrix/vector text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A machine operation was invoked in a state where it is not legal.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mvp
