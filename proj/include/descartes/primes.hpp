#pragma once

#include <cstdint>
#include <vector>

#include "descartes/integer.hpp"

namespace descartes {

/// All primes in [2, limit], ascending.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Deterministic primality for any 64-bit value.
bool is_prime(std::uint64_t n);

/// Deterministic primality. Above 64 bits this runs Miller-Rabin on the first
/// thirteen prime bases, which is proven exact below 3317044064679887385961981;
/// larger inputs throw std::domain_error.
bool is_prime(const Integer& n);

/// Upper end of the range where is_prime(const Integer&) is exact.
const Integer& primality_proven_limit();

/// Ascending, unbounded stream of primes, sieved in blocks on demand.
///
/// Each instance owns its own buffers, so separate streams can be used from
/// separate threads.
class PrimeStream {
 public:
  /// First call to next() returns the smallest prime >= start.
  explicit PrimeStream(std::uint64_t start = 2);

  std::uint64_t next();

 private:
  void refill();

  std::uint64_t block_lo_;
  std::vector<std::uint64_t> block_;
  std::size_t pos_ = 0;
  std::vector<std::uint64_t> base_;
  std::uint64_t base_limit_ = 0;
};

}  // namespace descartes
