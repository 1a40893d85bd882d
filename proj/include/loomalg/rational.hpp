#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace loomalg {

// Exact arbitrary-precision scalars. cpp_rational keeps every value reduced
// to lowest terms with a positive denominator, which is the representation
// contract the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" (optional leading sign, q != 0). Throws
// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);

} // namespace loomalg
