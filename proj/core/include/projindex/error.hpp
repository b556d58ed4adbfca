#pragma once

#include <stdexcept>
#include <string>

namespace projindex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line == 0 && column == 0) return message;
    if (line == 0) return "column " + std::to_string(column) + ": " + message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

/// Well-formed input that violates a declared invariant (degree, confluence, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Mathematically meaningless request: missing bundle data, model mismatch,
/// non-invertible class and similar.
class EngineError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold by construction failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace projindex
