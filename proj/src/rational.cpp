#include "compatlie/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace compatlie {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational");
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace compatlie
