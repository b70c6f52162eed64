#include "descartes/lemmas.hpp"

#include <stdexcept>

#include "descartes/descartes.hpp"
#include "descartes/primes.hpp"

namespace descartes {

std::string to_string(const LemmaVerdict& v) {
  if (v.holds) return "holds";
  std::string out = "fails: " + v.witness->reason;
  if (!v.witness->values.empty()) {
    out += " {";
    for (std::size_t i = 0; i < v.witness->values.size(); ++i) {
      if (i > 0) out += ", ";
      out += v.witness->values[i].str();
    }
    out += "}";
  }
  return out;
}

LemmaVerdict lemma2_filter(const Factorization& k) {
  constexpr const char* id = "lemma2";
  if (!k.divisible_by_prime(3)) {
    return LemmaVerdict::fail(id, reason::kThreeMissing, {Integer(3)});
  }
  std::vector<Integer> residue_one;
  for (const auto& pp : k.powers()) {
    if (pp.prime % 3 == 1) residue_one.push_back(pp.prime);
  }
  if (residue_one.size() != 2) {
    return LemmaVerdict::fail(id, reason::kResidueOneCount, std::move(residue_one));
  }
  return LemmaVerdict::pass(id);
}

LemmaVerdict lemma4_check(const Factorization& s) {
  constexpr const char* id = "lemma4";
  if (!is_squarefree(s)) {
    throw std::invalid_argument("lemma4_check needs squarefree s, got " + s.to_string());
  }
  // sigma(s^2) is the product of p^2 + p + 1, so factor each term on its own.
  for (const auto& pp : s.powers()) {
    const Factorization term = factorize(sigma_p_squared(pp.prime));
    for (const auto& q : term.powers()) {
      if (q.prime % 3 == 2) {
        return LemmaVerdict::fail(id, reason::kResidueTwoDivisor, {q.prime});
      }
    }
  }
  return LemmaVerdict::pass(id);
}

LemmaVerdict lemma5_check(const Factorization& k, const Factorization& m) {
  constexpr const char* id = "lemma5";
  const Integer mv = m.value();
  if (mv % 12 != 1) {
    return LemmaVerdict::fail(id, reason::kNotOneMod12, {Integer(mv % 12)});
  }
  std::vector<Integer> shared;
  for (const auto& pp : m.powers()) {
    if (k.divisible_by_prime(pp.prime)) shared.push_back(pp.prime);
  }
  if (!shared.empty()) {
    return LemmaVerdict::fail(id, reason::kCommonFactor, std::move(shared));
  }
  return LemmaVerdict::pass(id);
}

LemmaVerdict lemma6_check(const Factorization& k, const Factorization& m) {
  constexpr const char* id = "lemma6";
  for (const auto& pp : k.powers()) {
    if (pp.exponent != 2) {
      return LemmaVerdict::fail(id, reason::kNotSquare, {pp.prime});
    }
  }
  const Integer s = sigma(k);
  if (s % m.value() != 0) {
    return LemmaVerdict::fail(id, reason::kMNotDividingSigma, {m.value(), s});
  }
  return LemmaVerdict::pass(id);
}

LemmaVerdict lemma9_admissible(const Integer& m) {
  constexpr const char* id = "lemma9";
  if (m == 1) {
    return LemmaVerdict::fail(id, reason::kMIsOne, {m});
  }
  if (mod_floor(m, 12) != 1) {
    return LemmaVerdict::fail(id, reason::kNotOneMod12, {m});
  }
  if (is_prime(m)) {
    return LemmaVerdict::fail(id, reason::kMPrime, {m});
  }
  if (m == 25) {
    return LemmaVerdict::fail(id, reason::kMIs25, {m});
  }
  if (m < 49) {
    return LemmaVerdict::fail(id, reason::kBelow49, {m});
  }
  return LemmaVerdict::pass(id);
}

}  // namespace descartes
