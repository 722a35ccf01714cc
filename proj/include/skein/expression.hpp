#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skein/errors.hpp"
#include "skein/laurent.hpp"

namespace skein {

// Recursive-descent parser for the text formats of scalars, annulus
// elements, column polynomials and diagram vectors:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | identifier | '(' expr ')' | partition-literal
//
// `Traits` supplies the value algebra:
//   static Value from_rational(const Rational&);
//   static std::optional<Value> atom(std::string_view identifier);
//   static std::optional<Value> divide(const Value&, const Value&);
//   static std::optional<Value> power(const Value&, int);
//   static constexpr bool kPartitionLiterals;
//   static Value partition(const std::vector<int>& parts);  // if enabled
template <class Traits>
class ExpressionParser {
 public:
  using Value = decltype(Traits::from_rational(Rational(0)));

  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Value parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + term();
      } else if (accept('-')) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Value term() {
    Value lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Value rhs = unary();
        auto q = Traits::divide(lhs, rhs);
        if (!q) throw ParseError(at, "division by zero or by a non-scalar");
        lhs = std::move(*q);
      } else {
        return lhs;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const long k = integer("exponent");
    auto r = Traits::power(base, negative ? -static_cast<int>(k) : static_cast<int>(k));
    if (!r) throw ParseError(at, "exponent not allowed for this operand");
    return std::move(*r);
  }

  long integer(const char* what) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 100000000) fail(std::string(what) + " too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::optional<std::vector<int>> try_partition_literal() {
    // '(' already consumed; accept only digits, commas and spaces up to ')'.
    std::size_t p = pos_;
    while (p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == ',' ||
                                text_[p] == ' ')) {
      ++p;
    }
    if (p >= text_.size() || text_[p] != ')') return std::nullopt;
    std::vector<int> parts;
    std::string_view body = text_.substr(pos_, p - pos_);
    std::size_t start = 0;
    bool any_digit = false;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == ',') {
        std::string item;
        for (std::size_t j = start; j < i; ++j) {
          if (body[j] != ' ') item += body[j];
        }
        if (item.empty()) throw ParseError(pos_ + i, "empty part in partition literal");
        parts.push_back(std::stoi(item));
        any_digit = true;
        start = i + 1;
      }
    }
    if (!any_digit) return std::nullopt;
    pos_ = p + 1;
    return parts;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      if constexpr (Traits::kPartitionLiterals) {
        const std::size_t at = pos_;
        if (auto parts = try_partition_literal()) {
          try {
            return Traits::partition(*parts);
          } catch (const std::invalid_argument& e) {
            throw ParseError(at, e.what());
          }
        }
      }
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Traits::from_rational(Rational(integer("integer")));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      auto v = Traits::atom(ident);
      if (!v) throw ParseError(start, "unknown identifier '" + std::string(ident) + "'");
      return std::move(*v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace skein
