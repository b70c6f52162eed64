#pragma once

#include <string>
#include <utility>
#include <vector>

#include "descartes/factorization.hpp"
#include "descartes/rational.hpp"

namespace descartes {

/// Every cube-free odd m with exactly omega distinct prime factors, all of
/// them drawn from required_primes (each required prime dividing m), and
/// m = mod12_residue (mod 12). Exponents range over 1..2. Ascending.
///
/// Empty when omega < required_primes.size(). When omega exceeds it the set
/// is infinite; use enumerate_m_shapes instead (std::invalid_argument here).
std::vector<Integer> enumerate_m_candidates(const std::vector<Integer>& required_primes,
                                            unsigned omega_m, unsigned mod12_residue);

/// m = fixed * t_1 * ... where each free factor t is a new prime or the
/// square of one.
struct MShape {
  Factorization fixed;
  unsigned free_factors = 0;

  /// "13^2*19*t" style; free factors are t, t2, ...
  std::string to_string() const;

  friend bool operator==(const MShape&, const MShape&) = default;
};

/// All exponent patterns (1..2 on each required prime) with
/// omega_m - required_primes.size() free factors. Ordered by fixed value.
std::vector<MShape> enumerate_m_shapes(const std::vector<Integer>& required_primes,
                                       unsigned omega_m);

/// Range of f(p)f(q) forced by sigma(k)(m+1) = 2km when k = k_fixed p^2 q^2
/// and m >= m_min:
///
///     f(p)f(q) = sigma(k_fixed)/(2 k_fixed) * (m + 1)/m,
///
/// which decreases in m. Returns {infimum, value at m_min}.
std::pair<Rational, Rational> f_product_bounds(const Factorization& k_fixed, const Integer& m_min);

}  // namespace descartes
