#include "descartes/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "descartes/descartes.hpp"
#include "descartes/primes.hpp"

namespace descartes {

namespace {

struct PrimeFilter {
  std::optional<unsigned> residue_mod3;
  const std::vector<Integer>& excluded;

  bool admits(std::uint64_t p) const {
    if (residue_mod3 && p % 3 != *residue_mod3) return false;
    return std::find(excluded.begin(), excluded.end(), Integer(p)) == excluded.end();
  }
};

// Window (low, high] for the product of the f values of the free primes.
struct ProductWindow {
  Rational low_exclusive;
  Rational high_inclusive;
};

ProductWindow window_for(const SearchConstraint& c) {
  if (c.base.divisible_by_prime(2)) {
    throw std::invalid_argument("search base must be odd, got " + c.base.to_string());
  }
  if (!is_cube_free(c.base)) {
    throw std::invalid_argument("search base must be cube-free, got " + c.base.to_string());
  }
  if (c.m_lower < 49) {
    throw std::invalid_argument("m_lower must be at least 49, got " + c.m_lower.str());
  }
  if (c.residue_mod3 && *c.residue_mod3 > 2) {
    throw std::invalid_argument("residue_mod3 must be 0, 1 or 2");
  }
  const Rational a = abundancy(c.base);
  const Rational ratio_floor(2 * c.m_lower, c.m_lower + 1);
  return {a / Rational(2), a / ratio_floor};
}

std::string unbounded_message(std::uint64_t p) {
  return "q is unbounded for p = " + std::to_string(p) +
         ": f(p) alone already lies inside the target window";
}

}  // namespace

std::vector<PrimePair> pair_search(const SearchConstraint& c) {
  const ProductWindow w = window_for(c);
  const PrimeFilter filter{c.residue_mod3, c.excluded_primes};
  std::vector<PrimePair> out;

  PrimeStream ps(3);
  for (std::uint64_t p = ps.next();; p = ps.next()) {
    const Rational fp = f_of_p(Integer(p));
    // q > p gives f(p)f(q) > f(p)^2, and f is increasing.
    if (fp * fp >= w.high_inclusive) break;
    if (!filter.admits(p)) continue;
    // f(q) < 1 gives f(p)f(q) < f(p).
    if (fp <= w.low_exclusive) continue;
    if (fp <= w.high_inclusive) throw std::domain_error(unbounded_message(p));

    PrimeStream qs(p + 1);
    for (std::uint64_t q = qs.next();; q = qs.next()) {
      const Rational product = fp * f_of_p(Integer(q));
      if (product > w.high_inclusive) break;
      if (product > w.low_exclusive && filter.admits(q)) out.push_back({p, q});
    }
  }
  return out;
}

std::vector<std::uint64_t> single_prime_search(const SearchConstraint& c) {
  const ProductWindow w = window_for(c);
  if (w.high_inclusive >= Rational(1)) {
    throw std::domain_error("single-prime window reaches 1: q is unbounded");
  }
  const PrimeFilter filter{c.residue_mod3, c.excluded_primes};
  std::vector<std::uint64_t> out;
  PrimeStream qs(3);
  for (std::uint64_t q = qs.next();; q = qs.next()) {
    const Rational fq = f_of_p(Integer(q));
    if (fq > w.high_inclusive) break;
    if (fq > w.low_exclusive && filter.admits(q)) out.push_back(q);
  }
  return out;
}

std::vector<PrimePair> f_product_interval_search(const IntervalConstraint& c) {
  if (c.lower <= Rational(0) || c.lower > c.upper) {
    throw std::invalid_argument("interval search needs 0 < lower <= upper");
  }
  if (c.upper >= Rational(1)) {
    throw std::invalid_argument("interval upper bound must be < 1 since f(p)f(q) < 1");
  }
  const PrimeFilter filter{c.residue_mod3, c.excluded_primes};
  std::vector<PrimePair> out;

  PrimeStream ps(std::max<std::uint64_t>(c.p_min, 2));
  for (std::uint64_t p = ps.next();; p = ps.next()) {
    const Rational fp = f_of_p(Integer(p));
    if (fp * fp >= c.upper) break;
    if (!filter.admits(p)) continue;
    if (fp <= c.lower) continue;
    if (fp <= c.upper) throw std::domain_error(unbounded_message(p));

    PrimeStream qs(p + 1);
    for (std::uint64_t q = qs.next();; q = qs.next()) {
      const Rational product = fp * f_of_p(Integer(q));
      if (product > c.upper) break;
      if (product >= c.lower && filter.admits(q)) out.push_back({p, q});
    }
  }
  return out;
}

}  // namespace descartes
