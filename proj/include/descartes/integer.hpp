#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace descartes {

/// Exact signed integer, magnitude up to 2^256 - 1.
///
/// Every arithmetic operation is range-checked: a result that does not fit
/// throws std::overflow_error rather than wrapping.
using Integer = boost::multiprecision::checked_int256_t;

/// Parses a plain decimal literal with an optional leading '-'.
/// Throws std::invalid_argument on anything else (no hex, no octal, no spaces).
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

bool fits_u64(const Integer& value);

/// Throws std::out_of_range when the value is negative or wider than 64 bits.
std::uint64_t to_u64(const Integer& value);

Integer ipow(Integer base, unsigned exponent);

Integer gcd(const Integer& a, const Integer& b);

/// Non-negative residue of value modulo a positive modulus.
Integer mod_floor(const Integer& value, const Integer& modulus);

}  // namespace descartes
