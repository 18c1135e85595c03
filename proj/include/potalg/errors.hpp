#pragma once

#include <stdexcept>
#include <string>

namespace potalg {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematical precondition violated (zero polynomial, singular matrix, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structural misuse: alphabet or field mismatch, malformed configuration.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A query exceeded the range certified by a truncated Groebner basis.
class StalenessError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Expression syntax error with source position (1-based).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace potalg
