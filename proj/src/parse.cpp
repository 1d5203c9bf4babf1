#include "flagchow/parse.hpp"

#include <cctype>
#include <limits>

#include "flagchow/errors.hpp"

namespace flagchow {

void TextCursor::advance() {
  if (text_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void TextCursor::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
}

bool TextCursor::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char TextCursor::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool TextCursor::consume(char c) {
  if (peek() != c) return false;
  advance();
  return true;
}

void TextCursor::expect(char c) {
  if (!consume(c)) {
    if (at_end()) fail(std::string("expected '") + c + "' but input ended");
    fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
  }
}

void TextCursor::expect(std::string_view word) {
  skip_space();
  if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
  for (std::size_t i = 0; i < word.size(); ++i) advance();
}

void TextCursor::expect_end() {
  if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
}

mpz_class TextCursor::integer() {
  skip_space();
  bool negative = false;
  if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
    negative = text_[pos_] == '-';
    advance();
    skip_space();
  }
  if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    fail("expected an integer");
  }
  std::string digits;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    digits.push_back(text_[pos_]);
    advance();
  }
  mpz_class value(digits, 10);
  return negative ? mpz_class(-value) : value;
}

long TextCursor::small_integer() {
  const mpz_class v = integer();
  if (!v.fits_slong_p()) fail("integer out of range");
  return v.get_si();
}

unsigned TextCursor::unsigned_integer() {
  skip_space();
  if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    fail("expected a nonnegative integer");
  }
  const mpz_class v = integer();
  if (v > std::numeric_limits<unsigned>::max()) fail("integer out of range");
  return static_cast<unsigned>(v.get_ui());
}

void TextCursor::fail(const std::string& message) const { throw ParseError(message, line_, column_); }

namespace {

IntPolynomial parse_unary(TextCursor& c);

IntPolynomial parse_atom(TextCursor& c) {
  const char ch = c.peek();
  if (ch == '(') {
    c.expect('(');
    IntPolynomial inner = parse_expression(c);
    c.expect(')');
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) return IntPolynomial(c.integer());
  if (ch == 'T') {
    c.expect('T');
    return IntPolynomial::var(VarId::t());
  }
  if (ch == 'H') {
    c.expect('H');
    return IntPolynomial::var(VarId::h());
  }
  if (ch == 'X') {
    c.expect('X');
    // The index must follow immediately: "X 1" is not a variable.
    if (c.rest().empty() || !std::isdigit(static_cast<unsigned char>(c.rest().front()))) {
      c.fail("expected a variable index after 'X'");
    }
    const unsigned index = c.unsigned_integer();
    if (index == 0) c.fail("X-variable indices start at 1");
    return IntPolynomial::var(VarId::x(index));
  }
  if (ch == '\0') c.fail("unexpected end of input");
  c.fail(std::string("unexpected '") + ch + "'");
}

IntPolynomial parse_power(TextCursor& c) {
  IntPolynomial base = parse_atom(c);
  if (c.consume('^')) return base.pow(c.unsigned_integer());
  return base;
}

IntPolynomial parse_unary(TextCursor& c) {
  if (c.consume('-')) return -parse_unary(c);
  if (c.consume('+')) return parse_unary(c);
  return parse_power(c);
}

IntPolynomial parse_term(TextCursor& c) {
  IntPolynomial value = parse_unary(c);
  while (c.consume('*')) value *= parse_unary(c);
  return value;
}

}  // namespace

IntPolynomial parse_expression(TextCursor& c) {
  IntPolynomial value = parse_term(c);
  for (;;) {
    if (c.consume('+')) {
      value += parse_term(c);
    } else if (c.consume('-')) {
      value -= parse_term(c);
    } else {
      return value;
    }
  }
}

IntPolynomial parse_polynomial(std::string_view text) {
  TextCursor c(text);
  IntPolynomial p = parse_expression(c);
  c.expect_end();
  return p;
}

std::vector<IntPolynomial> parse_polynomial_list(std::string_view text) {
  TextCursor c(text);
  std::vector<IntPolynomial> out;
  if (c.at_end()) return out;
  do {
    out.push_back(parse_expression(c));
  } while (c.consume(','));
  c.expect_end();
  return out;
}

std::vector<VarId> parse_variable_list(std::string_view text) {
  TextCursor c(text);
  std::vector<VarId> out;
  if (c.at_end()) return out;
  do {
    const char ch = c.peek();
    if (ch == 'T') {
      c.expect('T');
      out.push_back(VarId::t());
    } else if (ch == 'H') {
      c.expect('H');
      out.push_back(VarId::h());
    } else if (ch == 'X') {
      c.expect('X');
      const unsigned index = c.unsigned_integer();
      if (index == 0) c.fail("X-variable indices start at 1");
      out.push_back(VarId::x(index));
    } else {
      c.fail("expected a variable (X<k>, T or H)");
    }
  } while (c.consume(','));
  c.expect_end();
  return out;
}

}  // namespace flagchow
