#include "cgybe/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cgybe {

std::string to_fraction_string(const Rational& x) {
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

std::string to_compact_string(const Rational& x) {
  const BigInt den = denominator_of(x);
  if (den == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational pow(const Rational& x, int e) {
  if (e < 0) {
    if (x.is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(x, -e);
  }
  Rational result = 1;
  Rational base = x;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1u) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

}  // namespace cgybe
