#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nabla {

/// Exact rational in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p" or "p/q" with optional leading sign on p; q must be positive.
/// Throws FormatError otherwise.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace nabla
