#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", a signed integer, or a finite decimal ("0.8", "-2.25").
/// Decimals are converted exactly: "1.2" becomes 6/5.
/// Throws DomainError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("3/1").
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace cwm
