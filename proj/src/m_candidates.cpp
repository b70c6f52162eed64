#include "descartes/m_candidates.hpp"

#include <algorithm>
#include <stdexcept>

#include "descartes/primes.hpp"

namespace descartes {

namespace {

void validate_required(const std::vector<Integer>& required, unsigned omega_m) {
  if (omega_m < 1 || omega_m > 3) {
    throw std::invalid_argument("omega_m must be 1, 2 or 3");
  }
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (required[i] == 2 || !is_prime(required[i])) {
      throw std::invalid_argument("required divisor " + required[i].str() + " is not an odd prime");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (required[i] == required[j]) {
        throw std::invalid_argument("required primes must be distinct");
      }
    }
  }
}

// Calls visit(f) for every factorization with each required prime at exponent 1 or 2.
template <typename Visit>
void for_each_exponent_pattern(const std::vector<Integer>& required, Visit visit) {
  const std::size_t n = required.size();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<PrimePower> powers;
    for (std::size_t i = 0; i < n; ++i) {
      powers.push_back({required[i], (mask >> i) & 1U ? 2U : 1U});
    }
    visit(Factorization::from_powers(std::move(powers)));
  }
}

}  // namespace

std::vector<Integer> enumerate_m_candidates(const std::vector<Integer>& required_primes,
                                            unsigned omega_m, unsigned mod12_residue) {
  validate_required(required_primes, omega_m);
  if (omega_m < required_primes.size()) return {};
  if (omega_m > required_primes.size()) {
    throw std::invalid_argument(
        "omega_m exceeds the number of required primes; the candidate set is infinite");
  }
  std::vector<Integer> out;
  for_each_exponent_pattern(required_primes, [&](const Factorization& f) {
    const Integer m = f.value();
    if (m % 12 == mod12_residue) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string MShape::to_string() const {
  std::string out = fixed.empty() ? std::string{} : fixed.to_string();
  for (unsigned i = 0; i < free_factors; ++i) {
    if (!out.empty()) out += '*';
    out += i == 0 ? std::string("t") : "t" + std::to_string(i + 1);
  }
  return out.empty() ? "1" : out;
}

std::vector<MShape> enumerate_m_shapes(const std::vector<Integer>& required_primes,
                                       unsigned omega_m) {
  validate_required(required_primes, omega_m);
  if (omega_m < required_primes.size()) return {};
  const unsigned free = omega_m - static_cast<unsigned>(required_primes.size());
  std::vector<MShape> out;
  for_each_exponent_pattern(required_primes,
                            [&](const Factorization& f) { out.push_back({f, free}); });
  std::sort(out.begin(), out.end(), [](const MShape& a, const MShape& b) {
    return a.fixed.value() < b.fixed.value();
  });
  return out;
}

std::pair<Rational, Rational> f_product_bounds(const Factorization& k_fixed, const Integer& m_min) {
  if (m_min < 1) {
    throw std::invalid_argument("m_min must be positive");
  }
  const Rational base(sigma(k_fixed), 2 * k_fixed.value());
  return {base, base * Rational(m_min + 1, m_min)};
}

}  // namespace descartes
