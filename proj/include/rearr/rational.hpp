#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rearr {

/// Exact rational number. Every length, cost and bound in the 1-D model is
/// carried in this type so that comparisons never need a tolerance.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Decimal rendering with `digits` significant digits (plotting only).
std::string to_decimal(const Rational& r, int digits = 15);

/// Largest integer <= r.
BigInt floor(const Rational& r);

Rational make_rational(std::int64_t num, std::int64_t den);

}  // namespace rearr
