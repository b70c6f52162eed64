#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "descartes/factorization.hpp"
#include "descartes/rational.hpp"

namespace descartes {

struct PrimePair {
  std::uint64_t p = 0;
  std::uint64_t q = 0;

  friend auto operator<=>(const PrimePair&, const PrimePair&) = default;
};

/// Search space for k = base * p^2 * q^2 (or base * q^2 for the single-prime
/// search) against
///
///     2 m_lower / (m_lower + 1)  <=  sigma(base)/base * 1/f(p) * 1/f(q)  <  2.
///
/// The middle term is evaluated formally from the factors, so a free prime
/// that also divides base is still reported; cube-freeness is a later filter.
struct SearchConstraint {
  Factorization base;
  Integer m_lower = 49;
  std::optional<unsigned> residue_mod3;  // required residue of every free prime
  std::vector<Integer> excluded_primes;
};

/// Pairs of odd primes p < q satisfying the constraint, ordered by (p, q).
///
/// The ranges are derived from the inequality: with A = sigma(base)/base the
/// product f(p)f(q) must lie in (A/2, A(m_lower+1)/(2 m_lower)], f(p)^2 below
/// the upper end bounds p, and for each p the monotonicity of f bounds q.
/// Throws std::invalid_argument for an even or non-cube-free base or
/// m_lower < 49, and std::domain_error if some admissible p leaves q unbounded.
std::vector<PrimePair> pair_search(const SearchConstraint& c);

/// Odd primes q, ascending, with k = base * q^2 satisfying the constraint.
std::vector<std::uint64_t> single_prime_search(const SearchConstraint& c);

struct IntervalConstraint {
  Rational lower;
  Rational upper;
  std::uint64_t p_min = 3;
  std::optional<unsigned> residue_mod3;
  std::vector<Integer> excluded_primes;
};

/// Prime pairs p < q (p >= p_min) with lower <= f(p)f(q) <= upper.
///
/// p stops once f(p)^2 >= upper; p with f(p) <= lower is skipped because
/// f(q) < 1. Throws std::invalid_argument unless 0 < lower <= upper < 1, and
/// std::domain_error if lower < f(p) <= upper for an admissible p (q unbounded).
std::vector<PrimePair> f_product_interval_search(const IntervalConstraint& c);

}  // namespace descartes
