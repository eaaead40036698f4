#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatcheck {

/// Malformed or inconsistent input (universe mismatch, rank mismatch, bad file).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called outside its mathematical domain (zero divisor, zero polynomial).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a problem file or polynomial string; positions are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A computation ran past the deadline installed by a ScopedDeadline.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flatcheck
