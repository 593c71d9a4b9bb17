#ifndef FKDV_RATIONAL_HPP
#define FKDV_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fkdv {

/// Arbitrary-precision integer and rational coefficient types.
///
/// Rational is always stored in canonical form: gcd(|num|, den) = 1,
/// den > 0, and zero is 0/1. The boost backend maintains this on every
/// operation, so equality of values is equality of representations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

/// Exact square root when `value` is a perfect square of a rational
/// (both numerator and denominator perfect integer squares); nullopt
/// otherwise. Requires value >= 0.
std::optional<Rational> rational_sqrt_exact(const Rational& value);

}  // namespace fkdv

#endif  // FKDV_RATIONAL_HPP
