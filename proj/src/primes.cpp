#include "descartes/primes.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace descartes {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint64_t, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Strong probable-prime test to base a for odd n > a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

Integer powmod(Integer base, Integer exp, const Integer& m) {
  Integer result = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime(const Integer& n, const Integer& a) {
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Integer x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= limit / i) {
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  // The first twelve prime bases are exact for n < 3.18e23, which covers 2^64.
  for (std::size_t i = 0; i < 12; ++i) {
    if (!strong_probable_prime(n, kWitnesses[i])) return false;
  }
  return true;
}

const Integer& primality_proven_limit() {
  static const Integer limit{"3317044064679887385961981"};
  return limit;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(n.convert_to<std::uint64_t>());
  if (n >= primality_proven_limit()) {
    throw std::domain_error("primality of " + n.str() + " is beyond the deterministic range");
  }
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return false;
  }
  for (std::uint64_t p : kWitnesses) {
    if (!strong_probable_prime(n, Integer(p))) return false;
  }
  return true;
}

PrimeStream::PrimeStream(std::uint64_t start) : block_lo_(start < 2 ? 2 : start) {}

std::uint64_t PrimeStream::next() {
  while (pos_ >= block_.size()) refill();
  return block_[pos_++];
}

void PrimeStream::refill() {
  const std::uint64_t width = std::max<std::uint64_t>(1U << 15, block_lo_ / 4);
  const std::uint64_t lo = block_lo_;
  const std::uint64_t hi = lo + width;  // exclusive
  const std::uint64_t root = isqrt(hi - 1);
  if (root > base_limit_) {
    base_limit_ = std::max(root, base_limit_ * 2);
    base_ = sieve_primes(base_limit_);
  }
  std::vector<bool> composite(width, false);
  for (std::uint64_t p : base_) {
    if (p * p >= hi) break;
    std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = first; j < hi; j += p) composite[j - lo] = true;
  }
  block_.clear();
  pos_ = 0;
  for (std::uint64_t i = 0; i < width; ++i) {
    if (!composite[i] && lo + i >= 2) block_.push_back(lo + i);
  }
  block_lo_ = hi;
}

}  // namespace descartes
