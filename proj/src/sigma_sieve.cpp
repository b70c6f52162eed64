#include "descartes/sigma_sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "descartes/primes.hpp"

namespace descartes {

std::uint64_t SigmaTable::at(std::uint64_t n) const {
  if (n < lo_ || n >= hi()) {
    throw std::out_of_range("n = " + std::to_string(n) + " outside sigma table [" +
                            std::to_string(lo_) + ", " + std::to_string(hi()) + ")");
  }
  return values_[n - lo_];
}

SigmaTable sigma_sieve(std::uint64_t lo, std::uint64_t hi, std::size_t max_entries) {
  if (lo < 1 || lo >= hi) {
    throw std::invalid_argument("sigma_sieve needs 1 <= lo < hi");
  }
  if (hi > kSieveCeiling) {
    throw std::invalid_argument("sigma_sieve range exceeds 2^50");
  }
  const std::uint64_t width = hi - lo;
  if (width > max_entries) {
    throw std::length_error("sigma_sieve of " + std::to_string(width) +
                            " values exceeds the memory budget of " + std::to_string(max_entries));
  }

  std::vector<std::uint64_t> rem(width);
  std::vector<std::uint64_t> sig(width, 1);
  for (std::uint64_t i = 0; i < width; ++i) rem[i] = lo + i;

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi - 1)));
  while (root * root > hi - 1) --root;
  while ((root + 1) * (root + 1) <= hi - 1) ++root;

  for (std::uint64_t p : sieve_primes(root)) {
    for (std::uint64_t n = (lo + p - 1) / p * p; n < hi; n += p) {
      const std::uint64_t i = n - lo;
      std::uint64_t r = rem[i];
      std::uint64_t power = 1;
      std::uint64_t sum = 1;
      do {
        r /= p;
        power *= p;
        sum += power;
      } while (r % p == 0);
      rem[i] = r;
      sig[i] *= sum;
    }
  }
  for (std::uint64_t i = 0; i < width; ++i) {
    if (rem[i] > 1) sig[i] *= rem[i] + 1;
  }
  return SigmaTable(lo, std::move(sig));
}

}  // namespace descartes
