#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "descartes/integer.hpp"
#include "descartes/rational.hpp"

namespace descartes {

struct PrimePower {
  Integer prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing, each passes is_prime, exponents are >= 1.
/// The empty factorization is 1.
class Factorization {
 public:
  Factorization() = default;

  /// Sorts, merges repeated primes and validates. Throws std::invalid_argument
  /// on a non-prime base or a zero exponent.
  static Factorization from_powers(std::vector<PrimePower> powers);

  /// Parses "p^e*p^e*..." (bare p means p^1, order free) or a plain decimal
  /// integer, which is factorized. Throws std::invalid_argument on malformed
  /// or non-positive input.
  static Factorization parse(std::string_view text);

  const std::vector<PrimePower>& powers() const& { return powers_; }
  // By value on temporaries, so range-for over factorize(n).powers() is safe.
  std::vector<PrimePower> powers() && { return std::move(powers_); }
  bool empty() const { return powers_.empty(); }

  /// Number of distinct prime divisors.
  std::size_t omega() const { return powers_.size(); }

  unsigned exponent_of(const Integer& prime) const;
  bool divisible_by_prime(const Integer& prime) const { return exponent_of(prime) > 0; }

  Integer value() const;

  /// "3^2*7^2*11^2*13^2"; "1" when empty.
  std::string to_string() const;

  friend Factorization operator*(const Factorization& a, const Factorization& b);
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  friend Factorization factorize(const Integer& n);
  std::vector<PrimePower> powers_;
};

/// Trial division by primes below 2^20, finishing with a primality test on
/// the cofactor. Throws std::invalid_argument for n <= 0 and
/// std::domain_error when the cofactor is a product of two primes above 2^20.
Factorization factorize(const Integer& n);

/// Divisor sum: product over p^e of (p^(e+1) - 1)/(p - 1).
Integer sigma(const Factorization& f);

/// sigma(n)/n as an exact fraction.
Rational abundancy(const Factorization& f);

/// p^2 / sigma(p^2). Throws std::invalid_argument if p is not prime.
Rational f_of_p(const Integer& p);

/// sigma(p^2) = p^2 + p + 1.
Integer sigma_p_squared(const Integer& p);

}  // namespace descartes
