#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagchow {

// Bad arguments or a violated precondition (CLI exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the range the classification covers, e.g. rank > d.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Syntax error in one of the text grammars. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace flagchow
