#include "descartes/crt.hpp"

namespace descartes {

namespace {

// Returns g = gcd(a, b) and x with a*x = g (mod b).
std::pair<Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return {old_r, old_s};
}

bool compatible(const Congruence& a, const Congruence& b) {
  return (a.residue - b.residue) % gcd(a.modulus, b.modulus) == 0;
}

}  // namespace

Congruence::Congruence(Integer r, Integer n) : residue(std::move(r)), modulus(std::move(n)) {
  if (modulus <= 0) {
    throw std::invalid_argument("congruence modulus must be positive, got " + modulus.str());
  }
  residue = mod_floor(residue, modulus);
}

bool Congruence::contains(const Integer& x) const { return mod_floor(x, modulus) == residue; }

std::string Congruence::to_string() const {
  return residue.str() + " (mod " + modulus.str() + ")";
}

InconsistentCongruences::InconsistentCongruences(Congruence a, Congruence b)
    : std::domain_error("inconsistent congruences: x = " + a.to_string() + " and x = " +
                        b.to_string()),
      first_(std::move(a)),
      second_(std::move(b)) {}

Congruence forced_residue(std::span<const Congruence> facts) {
  Congruence acc{0, 1};
  for (std::size_t i = 0; i < facts.size(); ++i) {
    const Congruence& next = facts[i];
    if (!compatible(acc, next)) {
      // Pairwise compatibility is equivalent to solvability, so some earlier
      // single fact already clashes with this one.
      for (std::size_t j = 0; j < i; ++j) {
        if (!compatible(facts[j], next)) throw InconsistentCongruences(facts[j], next);
      }
      throw InconsistentCongruences(acc, next);
    }
    const Integer g = gcd(acc.modulus, next.modulus);
    const Integer n1 = acc.modulus / g;
    const Integer n2 = next.modulus / g;
    const Integer inv = extended_gcd(mod_floor(n1, n2), n2).second;
    const Integer step = mod_floor((next.residue - acc.residue) / g * inv, n2);
    const Integer lcm = acc.modulus * n2;
    acc = Congruence(acc.residue + acc.modulus * step, lcm);
  }
  return acc;
}

}  // namespace descartes
