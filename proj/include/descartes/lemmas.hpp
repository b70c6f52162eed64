#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descartes/factorization.hpp"
#include "descartes/integer.hpp"

namespace descartes {

/// Why a lemma check failed: a short reason code plus the offending values.
struct Witness {
  std::string reason;
  std::vector<Integer> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of one admissibility check. witness is set exactly when !holds.
struct LemmaVerdict {
  std::string lemma;
  bool holds = true;
  std::optional<Witness> witness;

  static LemmaVerdict pass(std::string lemma) { return {std::move(lemma), true, std::nullopt}; }
  static LemmaVerdict fail(std::string lemma, std::string reason, std::vector<Integer> values = {}) {
    return {std::move(lemma), false, Witness{std::move(reason), std::move(values)}};
  }
};

/// "holds" or "fails: <reason> {v1, v2}".
std::string to_string(const LemmaVerdict& v);

// Reason codes used in witnesses.
namespace reason {
inline constexpr const char* kThreeMissing = "3_does_not_divide_k";
inline constexpr const char* kResidueOneCount = "residue_1_prime_count";
inline constexpr const char* kResidueTwoDivisor = "residue_2_divisor";
inline constexpr const char* kNotOneMod12 = "not_1_mod_12";
inline constexpr const char* kCommonFactor = "common_factor";
inline constexpr const char* kNotSquare = "k_not_squarefree_square";
inline constexpr const char* kMNotDividingSigma = "m_does_not_divide_sigma_k";
inline constexpr const char* kMIsOne = "m_is_1";
inline constexpr const char* kMPrime = "m_prime";
inline constexpr const char* kMIs25 = "m_is_25";
inline constexpr const char* kBelow49 = "m_below_49";
}  // namespace reason

/// 3 | k and exactly two distinct primes p | k have p = 1 (mod 3).
/// Witness on failure: the residue-1 primes found (or 3, if 3 does not divide k).
LemmaVerdict lemma2_filter(const Factorization& k);

/// No prime factor of sigma(s^2) is 2 (mod 3). s must be squarefree, else
/// std::invalid_argument. Witness: the offending prime.
LemmaVerdict lemma4_check(const Factorization& s);

/// m = 1 (mod 12) and gcd(k, m) = 1, the gcd taken by prime-set intersection.
LemmaVerdict lemma5_check(const Factorization& k, const Factorization& m);

/// k = s^2 with s squarefree, and m | sigma(k).
LemmaVerdict lemma6_check(const Factorization& k, const Factorization& m);

/// m >= 49, m = 1 (mod 12) and m composite, with the exclusion that fired
/// named in the witness (m = 1, residue, m prime, m = 25).
LemmaVerdict lemma9_admissible(const Integer& m);

}  // namespace descartes
