#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ussp {

/// Checked arithmetic left the representable range [0, 2^127 - 1].
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInputError : public std::runtime_error {
 public:
  explicit EmptyInputError(const std::string& what) : std::runtime_error(what) {}
};

class NotCoprimeError : public std::runtime_error {
 public:
  explicit NotCoprimeError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by value-returning operations whose precondition gcd | s fails;
/// solver entry points report infeasibility as a result status instead.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A table-based oracle was asked to build a table past its configured bound.
class CeilingExceededError : public std::runtime_error {
 public:
  explicit CeilingExceededError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ussp
