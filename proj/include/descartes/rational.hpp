#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "descartes/integer.hpp"

namespace descartes {

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// Ordering is by cross-multiplication; there is no floating-point path.
class Rational {
 public:
  Rational() = default;
  Rational(Integer numerator);  // NOLINT(google-explicit-constructor)
  Rational(Integer numerator, Integer denominator);
  Rational(long long numerator, long long denominator)
      : Rational(Integer(numerator), Integer(denominator)) {}

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

/// Three-way exact comparison: sign of a.num * b.den - b.num * a.den.
std::strong_ordering rational_cmp(const Rational& a, const Rational& b);

Rational pow(const Rational& base, unsigned exponent);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

/// Accepts "n" or "n/d" with decimal n, d.
Rational parse_rational(std::string_view text);

}  // namespace descartes
