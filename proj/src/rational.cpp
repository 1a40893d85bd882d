#include "loomalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace loomalg {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer_token(num) ||
      (slash != std::string_view::npos && !valid_integer_token(den))) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q = slash == std::string_view::npos ? Integer(1) : Integer{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string rational_str(const Rational& r) {
  return r.str();
}

} // namespace loomalg
