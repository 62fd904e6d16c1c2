#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& where) : Error("pole at q = " + where) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error(format(message, position, line)), message_(message), position_(position), line_(line) {}

  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t position, std::size_t line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(position + 1) + ": " + message;
    return out;
  }
  std::string message_;
  std::size_t position_;
  std::size_t line_;
};

/// Operands that live in different algebras or have incompatible shapes.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated (missing structure, unverified map, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// σ or ℓ was asked to act on an element outside the connection's domain.
class CoverageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qb
