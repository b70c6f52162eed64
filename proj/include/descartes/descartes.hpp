#pragma once

#include <optional>

#include "descartes/factorization.hpp"
#include "descartes/integer.hpp"

namespace descartes {

/// True iff k*m is odd, k*m > 1 and sigma(k)(m + 1) = 2km exactly.
///
/// Only the defining equation is checked; admissibility filters live in
/// lemmas.hpp and are never folded in here.
bool is_descartes_pair(const Factorization& k, const Factorization& m);

/// The unique m with sigma(k)(m + 1) = 2km, i.e. sigma(k) / (2k - sigma(k)),
/// when that quotient exists, is odd and k*m > 1. Throws std::invalid_argument
/// for even k.
std::optional<Integer> solve_m(const Factorization& k);

/// All exponents <= 2.
bool is_cube_free(const Factorization& f);

bool is_squarefree(const Factorization& f);

/// A verified solution of sigma(k)(m + 1) = 2km.
class DescartesPair {
 public:
  /// Returns a pair only if is_descartes_pair(k, m).
  static std::optional<DescartesPair> make(Factorization k, Factorization m);

  const Factorization& k() const { return k_; }
  const Factorization& m() const { return m_; }
  const Integer& n() const { return n_; }

  friend bool operator==(const DescartesPair&, const DescartesPair&) = default;

 private:
  DescartesPair(Factorization k, Factorization m, Integer n)
      : k_(std::move(k)), m_(std::move(m)), n_(std::move(n)) {}

  Factorization k_;
  Factorization m_;
  Integer n_;
};

}  // namespace descartes
