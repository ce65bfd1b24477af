#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace bicover {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps fractions in lowest terms with a positive denominator,
// which is exactly the canonical form used throughout.
using Rational = boost::multiprecision::cpp_rational;

// Safe construction from a possibly-negative denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Canonical "num/den" encoding, e.g. "3/2", "-1/2", "5/1".
std::string rational_to_string(const Rational& x);

// Accepts "num/den" as well as plain integers.
Rational rational_from_string(std::string_view text);

// Exact square root in Q, when one exists. Returns the nonnegative root.
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace bicover
