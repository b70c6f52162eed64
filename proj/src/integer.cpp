#include "descartes/integer.hpp"

#include <limits>
#include <stdexcept>

namespace descartes {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
  }
  // boost treats a leading 0 as an octal prefix.
  while (digits.size() > 1 && digits.front() == '0') {
    digits.remove_prefix(1);
  }
  if (digits.size() > 78) {
    throw std::overflow_error("integer literal exceeds 256 bits");
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

bool fits_u64(const Integer& value) {
  return value >= 0 && value <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t to_u64(const Integer& value) {
  if (!fits_u64(value)) {
    throw std::out_of_range("value " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

Integer ipow(Integer base, unsigned exponent) {
  Integer result = 1;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
  if (modulus <= 0) {
    throw std::invalid_argument("modulus must be positive");
  }
  Integer r = value % modulus;
  if (r < 0) {
    r += modulus;
  }
  return r;
}

}  // namespace descartes
