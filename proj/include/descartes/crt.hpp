#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "descartes/integer.hpp"

namespace descartes {

/// x = residue (mod modulus), residue normalized into [0, modulus).
struct Congruence {
  Integer residue;
  Integer modulus;

  Congruence(Integer r, Integer n);

  /// d | x, i.e. x = 0 (mod d).
  static Congruence divisible_by(const Integer& d) { return {0, d}; }

  bool contains(const Integer& x) const;

  /// "949 (mod 3900)"
  std::string to_string() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

class InconsistentCongruences : public std::domain_error {
 public:
  InconsistentCongruences(Congruence a, Congruence b);

  const Congruence& first() const { return first_; }
  const Congruence& second() const { return second_; }

 private:
  Congruence first_;
  Congruence second_;
};

/// Chinese-remainder combination of arbitrary (not necessarily coprime)
/// moduli into one class modulo their lcm. An empty list gives 0 (mod 1).
/// Throws InconsistentCongruences naming two facts that cannot hold together.
Congruence forced_residue(std::span<const Congruence> facts);

}  // namespace descartes
