#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

/// Exact arbitrary-precision rational used for symbolic coefficients and
/// for exact numeric checks.
using Rational = boost::multiprecision::cpp_rational;

/// "3", "-3/2".
std::string to_string(const Rational& r);

/// Accepts integers ("12"), fractions ("3/4") and plain decimals ("-0.125",
/// "1e-3"). Decimals are converted exactly, so "0.1" is 1/10.
Rational parse_rational(std::string_view text);

}  // namespace arbor
