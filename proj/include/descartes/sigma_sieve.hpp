#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace descartes {

/// sigma(n) for every n in [lo, hi).
class SigmaTable {
 public:
  SigmaTable(std::uint64_t lo, std::vector<std::uint64_t> values)
      : lo_(lo), values_(std::move(values)) {}

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return lo_ + values_.size(); }

  /// Throws std::out_of_range outside [lo, hi).
  std::uint64_t at(std::uint64_t n) const;

  std::span<const std::uint64_t> values() const { return values_; }

 private:
  std::uint64_t lo_;
  std::vector<std::uint64_t> values_;
};

inline constexpr std::size_t kDefaultSieveBudget = std::size_t{1} << 25;

/// Largest hi accepted; sigma(n) < 2^64 holds comfortably below it.
inline constexpr std::uint64_t kSieveCeiling = std::uint64_t{1} << 50;

/// Segmented divisor-sum sieve over [lo, hi).
///
/// Each n is stripped of every prime p <= sqrt(hi) dividing it, multiplying
/// in (p^(e+1) - 1)/(p - 1); a leftover cofactor > 1 is a single prime r and
/// contributes r + 1. Throws std::invalid_argument unless 1 <= lo < hi <=
/// kSieveCeiling, and std::length_error when hi - lo exceeds max_entries.
SigmaTable sigma_sieve(std::uint64_t lo, std::uint64_t hi,
                       std::size_t max_entries = kDefaultSieveBudget);

}  // namespace descartes
