#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagchow/polynomial.hpp"

namespace flagchow {

// Character cursor over a text literal with 1-based line/column tracking.
// Whitespace is skipped before every token.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  // Next non-space character, or '\0' at end of input.
  char peek();
  bool consume(char c);
  void expect(char c);
  void expect(std::string_view word);
  void expect_end();
  // Optionally signed decimal integer.
  mpz_class integer();
  long small_integer();
  unsigned unsigned_integer();

  [[noreturn]] void fail(const std::string& message) const;

  std::size_t offset() const noexcept { return pos_; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }

 private:
  void advance();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' digits)?
//   atom  := digits | 'X' digits | 'T' | 'H' | '(' expr ')'
// Whitespace-insensitive. Throws ParseError with line/column.
IntPolynomial parse_polynomial(std::string_view text);

// Comma-separated polynomials, e.g. "-X1, -2*X2".
std::vector<IntPolynomial> parse_polynomial_list(std::string_view text);

// Comma-separated variable names, e.g. "X1,X2,T".
std::vector<VarId> parse_variable_list(std::string_view text);

// Reads one polynomial expression at the cursor (shared by literal parsers).
IntPolynomial parse_expression(TextCursor& cursor);

}  // namespace flagchow
