#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ivbounds {

/// Exact rational number. GMP keeps every value canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/**
 * Parse an exact rational from text.
 *
 * Accepted forms are an optionally signed integer ("3"), a fraction ("-3/10"),
 * or a finite decimal ("0.3", ".25", "1."). Decimals are read as fractions
 * over powers of ten, so "0.3" is exactly 3/10. Throws ValidationError with
 * kind MalformedNumber on anything else, including a zero denominator.
 */
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);

/// Approximate decimal rendering with the given number of fractional digits.
std::string to_decimal(const Rational& value, int digits);

}  // namespace ivbounds
