#include "descartes/rational.hpp"

#include <stdexcept>

namespace descartes {

Rational::Rational(Integer numerator) : num_(std::move(numerator)), den_(1) {}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) {
    throw std::domain_error("reciprocal of zero");
  }
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const Integer g1 = gcd(a.num_, b.den_);
  const Integer g2 = gcd(b.num_, a.den_);
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return rational_cmp(a, b);
}

std::strong_ordering rational_cmp(const Rational& a, const Rational& b) {
  const Integer lhs = a.numerator() * b.denominator();
  const Integer rhs = b.numerator() * a.denominator();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(ipow(base.numerator(), exponent), ipow(base.denominator(), exponent));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) {
    return to_string(r.numerator());
  }
  return to_string(r.numerator()) + "/" + to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

}  // namespace descartes
