#include "descartes/descartes.hpp"

#include <algorithm>
#include <stdexcept>

namespace descartes {

bool is_descartes_pair(const Factorization& k, const Factorization& m) {
  if (k.divisible_by_prime(2) || m.divisible_by_prime(2)) return false;
  const Integer kv = k.value();
  const Integer mv = m.value();
  if (kv * mv <= 1) return false;
  return sigma(k) * (mv + 1) == 2 * kv * mv;
}

std::optional<Integer> solve_m(const Factorization& k) {
  if (k.divisible_by_prime(2)) {
    throw std::invalid_argument("solve_m needs odd k, got " + k.to_string());
  }
  const Integer kv = k.value();
  const Integer s = sigma(k);
  const Integer gap = 2 * kv - s;
  if (gap <= 0 || s % gap != 0) return std::nullopt;
  Integer m = s / gap;
  if ((m & 1) == 0 || kv * m <= 1) return std::nullopt;
  return m;
}

bool is_cube_free(const Factorization& f) {
  return std::all_of(f.powers().begin(), f.powers().end(),
                     [](const PrimePower& pp) { return pp.exponent <= 2; });
}

bool is_squarefree(const Factorization& f) {
  return std::all_of(f.powers().begin(), f.powers().end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::optional<DescartesPair> DescartesPair::make(Factorization k, Factorization m) {
  if (!is_descartes_pair(k, m)) return std::nullopt;
  Integer n = k.value() * m.value();
  return DescartesPair(std::move(k), std::move(m), std::move(n));
}

}  // namespace descartes
