#pragma once

// Text syntax for words:
//
//   word   := '1' | factor { [ '*' | '.' ] factor }
//   factor := atom [ '^' int ]
//   atom   := name | '(' word ')' | '[' word ',' word ']' | '1'
//
// Tokens are separated by whitespace. Names are [A-Za-z_][A-Za-z0-9_']*.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "reveng/error.hpp"
#include "reveng/word.hpp"

namespace reveng {

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, Alphabet const& alphabet, std::size_t line, std::size_t column)
      : text_(text), alphabet_(alphabet), line_(line), column_(column) {}

  Word parse_all() {
    skip_ws();
    if (at_end()) fail("empty word (write 1 for the identity)");
    Word w = parse_word();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  static constexpr std::int64_t kMaxExponent = 1'000'000;

  [[noreturn]] void fail(std::string const& what) const { throw SyntaxError(line_, column_ + pos_, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool factor_start() const {
    char c = peek();
    return name_start(c) || c == '(' || c == '[' || c == '1';
  }

  Word parse_word() {
    Word w;
    skip_ws();
    if (!factor_start()) fail("expected a generator, '(' or '['");
    while (true) {
      w *= parse_factor();
      skip_ws();
      if (peek() == '*' || peek() == '.') {
        ++pos_;
        skip_ws();
        if (!factor_start()) fail("expected a factor after operator");
        continue;
      }
      if (!factor_start()) break;
    }
    return w;
  }

  Word parse_factor() {
    Word base = parse_atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    bool paren = peek() == '(';
    if (paren) {
      ++pos_;
      skip_ws();
    }
    std::int64_t k = parse_int();
    if (paren) {
      skip_ws();
      if (peek() != ')') fail("expected ')' closing exponent");
      ++pos_;
    }
    if (k > kMaxExponent || k < -kMaxExponent) fail("exponent out of range");
    return base.pow(k);
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    return value;
  }

  Word parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_word();
      skip_ws();
      if (peek() != ',') fail("expected ',' inside commutator");
      ++pos_;
      Word y = parse_word();
      skip_ws();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      if (!at_end() && name_char(peek())) fail("identifiers must not start with a digit");
      return Word{};
    }
    std::size_t start = pos_;
    while (!at_end() && name_char(text_[pos_])) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto id = alphabet_.find(name);
    if (!id) {
      pos_ = start;
      fail("unresolved generator '" + std::string(name) + "'");
    }
    return Word::generator(*id);
  }

  std::string_view text_;
  Alphabet const& alphabet_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses a word; line/column locate text within an enclosing file for
// diagnostics (column is 1-based).
inline Word parse_word(std::string_view text, Alphabet const& alphabet, std::size_t line = 1,
                       std::size_t column = 1) {
  return detail::WordParser(text, alphabet, line, column).parse_all();
}

// Accepts "lhs = rhs" as the relator lhs rhs^-1; otherwise a plain word.
inline Word parse_relator(std::string_view text, Alphabet const& alphabet, std::size_t line = 1,
                          std::size_t column = 1) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_word(text, alphabet, line, column);
  if (text.find('=', eq + 1) != std::string_view::npos) throw SyntaxError(line, column + eq, "more than one '='");
  Word lhs = parse_word(text.substr(0, eq), alphabet, line, column);
  Word rhs = parse_word(text.substr(eq + 1), alphabet, line, column + eq + 1);
  return lhs * rhs.inverse();
}

}  // namespace reveng
