#include "cgybe/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace cgybe {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentQP parse() {
    LaurentQP value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  LaurentQP expr() {
    LaurentQP value = accept('-') ? -term() : term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  LaurentQP term() {
    LaurentQP value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  LaurentQP factor() {
    LaurentQP base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const int exponent = integer();
    if (negative && !base.is_unit()) fail("negative power of a non-unit '" + to_string(base) + "'");
    return base.pow(negative ? -exponent : exponent);
  }

  LaurentQP primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char ch = text_[pos_];
    if (ch == 'q' || ch == 'p') {
      ++pos_;
      return ch == 'q' ? LaurentQP::q() : LaurentQP::p();
    }
    if (ch == '(') {
      ++pos_;
      LaurentQP inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return LaurentQP(integer());
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000) fail("integer literal too large");
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(value);
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad Laurent expression '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentQP parse_laurent(std::string_view text) {
  if (text == "hecke") {
    const LaurentQP q = LaurentQP::q();
    return q - q.inverse();
  }
  return Parser(text).parse();
}

}  // namespace cgybe
