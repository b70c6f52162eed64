#include <doctest.h>

#include "descartes/descartes.hpp"
#include "descartes/lemmas.hpp"
#include "descartes/primes.hpp"
#include "descartes/sigma_sieve.hpp"

using namespace descartes;

namespace {

const Factorization kD = Factorization::parse("3^2*7^2*11^2*13^2");
const Factorization kM = Factorization::parse("22021");

Factorization F(const char* text) { return Factorization::parse(text); }

}  // namespace

TEST_CASE("is_descartes_pair") {
  CHECK(is_descartes_pair(kD, kM));
  CHECK_FALSE(is_descartes_pair(Factorization{}, Factorization{}));
  CHECK_FALSE(is_descartes_pair(kD, F("22023")));
  CHECK_FALSE(is_descartes_pair(F("9"), F("5")));
  // sigma(k)(m+1) = 2km with an even factor is not a Descartes pair.
  CHECK_FALSE(is_descartes_pair(F("2"), F("3")));
  CHECK(sigma(kD) * (kM.value() + 1) == 2 * kD.value() * kM.value());
  CHECK(sigma(kD) == 18035199);
}

TEST_CASE("solve_m") {
  CHECK(solve_m(kD) == Integer(22021));
  CHECK(solve_m(F("9018009")) == Integer(22021));
  CHECK_FALSE(solve_m(F("3^2")).has_value());
  CHECK_FALSE(solve_m(F("945")).has_value());
  CHECK_FALSE(solve_m(Factorization{}).has_value());
  CHECK_THROWS_AS(solve_m(F("18")), std::invalid_argument);
}

TEST_CASE("solve_m agrees with the verifier for odd k <= 10^5") {
  const SigmaTable table = sigma_sieve(1, 1000001);
  for (std::uint64_t k = 1; k <= 100000; k += 2) {
    const Factorization fk = factorize(k);
    const auto m = solve_m(fk);
    const std::uint64_t sk = table.at(k);
    if (m) {
      REQUIRE(is_descartes_pair(fk, factorize(*m)));
      REQUIRE(abundancy(fk) == Rational(2 * *m, *m + 1));
    }
    // sigma(k)(m+1) = 2km pins down m, so a solution m' <= 10^6 exists only
    // when 2k - sigma(k) > 0 divides sigma(k).
    if (2 * k > sk && sk % (2 * k - sk) == 0) {
      const std::uint64_t mm = sk / (2 * k - sk);
      const bool ok = mm % 2 == 1 && k * mm > 1;
      REQUIRE(m.has_value() == ok);
      if (ok) REQUIRE(*m == mm);
    } else {
      REQUIRE_FALSE(m.has_value());
    }
  }
}

TEST_CASE("a brute-force m scan finds only solve_m's answer") {
  for (std::uint64_t k : {9018009ull, 9ull, 225ull, 3969ull, 99225ull}) {
    const Factorization fk = factorize(k);
    const Integer sk = sigma(fk);
    const auto m = solve_m(fk);
    for (std::uint64_t mm = 1; mm <= 1000000; mm += 2) {
      if (sk * (mm + 1) == 2 * Integer(k) * mm && k * mm > 1) {
        REQUIRE(m.has_value());
        CHECK(*m == mm);
      }
    }
  }
}

TEST_CASE("DescartesPair") {
  const auto p = DescartesPair::make(kD, kM);
  REQUIRE(p.has_value());
  CHECK(p->n() == parse_integer("198585576189"));
  CHECK_FALSE(DescartesPair::make(kD, F("22023")).has_value());
  CHECK_FALSE(DescartesPair::make(Factorization{}, Factorization{}).has_value());
}

TEST_CASE("cube-free and squarefree") {
  CHECK(is_cube_free(kD * kM));
  CHECK_FALSE(is_cube_free(F("27")));
  CHECK(is_cube_free(Factorization{}));
  CHECK(is_squarefree(F("3*7*11*13")));
  CHECK_FALSE(is_squarefree(F("3^2")));
}

TEST_CASE("lemma2_filter") {
  CHECK(lemma2_filter(F("3^2*5^2*31^2*17^2*61^2")).holds);
  const auto v1 = lemma2_filter(F("3^2*5^2*31^2*17^2*59^2"));
  CHECK_FALSE(v1.holds);
  REQUIRE(v1.witness);
  CHECK(v1.witness->values == std::vector<Integer>{31});
  const auto v2 = lemma2_filter(F("3^2*5^2*31^2*19^2*43^2"));
  CHECK_FALSE(v2.holds);
  CHECK(v2.witness->values == std::vector<Integer>{19, 31, 43});
  const auto v3 = lemma2_filter(F("5^2*7^2*13^2"));
  CHECK_FALSE(v3.holds);
  CHECK(v3.witness->reason == reason::kThreeMissing);
  CHECK(lemma2_filter(kD).holds);
}

TEST_CASE("lemma4_check") {
  CHECK(lemma4_check(F("3*7*11*13")).holds);
  CHECK(factorize(sigma(F("3^2*7^2*11^2*13^2"))).to_string() == "3^2*7*13*19^2*61");
  CHECK(lemma4_check(F("5")).holds);
  CHECK(lemma4_check(F("2")).holds);
  CHECK_THROWS_AS(lemma4_check(F("3^2")), std::invalid_argument);
}

TEST_CASE("Lemma 4 holds for every squarefree s <= 10^4") {
  for (std::uint64_t s = 1; s <= 10000; ++s) {
    const Factorization f = factorize(s);
    if (!is_squarefree(f)) continue;
    const auto v = lemma4_check(f);
    REQUIRE(v.holds);
    REQUIRE_FALSE(v.witness.has_value());
    // Independent check on the full divisor sum.
    const Factorization full = factorize(sigma(f * f));
    for (const auto& q : full.powers()) REQUIRE(q.prime % 3 != 2);
  }
}

TEST_CASE("lemma5_check") {
  CHECK(lemma5_check(kD, kM).holds);
  CHECK(Integer(22021) == 1835 * 12 + 1);
  const auto v = lemma5_check(kD, F("35"));
  CHECK_FALSE(v.holds);
  CHECK(v.witness->reason == reason::kNotOneMod12);
  const auto g = lemma5_check(F("3^2*5^2"), F("5^2"));
  CHECK_FALSE(g.holds);
  CHECK(g.witness->reason == reason::kCommonFactor);
  CHECK(g.witness->values == std::vector<Integer>{5});
  CHECK_FALSE(lemma5_check(F("3^2*5^2"), F("15")).holds);
}

TEST_CASE("lemma6_check") {
  CHECK(lemma6_check(kD, kM).holds);
  CHECK(Integer(22021) * 819 == 18035199);
  CHECK_FALSE(lemma6_check(F("3*7^2"), F("13")).holds);
  const auto v = lemma6_check(F("3^2*7^2"), F("25"));
  CHECK_FALSE(v.holds);
  CHECK(v.witness->reason == reason::kMNotDividingSigma);
  CHECK(sigma(F("3^2*7^2")) == 741);
}

TEST_CASE("lemma9_admissible") {
  CHECK(to_string(lemma9_admissible(1)) == "fails: m_is_1 {1}");
  CHECK(to_string(lemma9_admissible(25)) == "fails: m_is_25 {25}");
  CHECK(to_string(lemma9_admissible(13)) == "fails: m_prime {13}");
  CHECK(to_string(lemma9_admissible(37)) == "fails: m_prime {37}");
  CHECK(lemma9_admissible(15).witness->reason == reason::kNotOneMod12);
  CHECK(lemma9_admissible(49).holds);
  CHECK(lemma9_admissible(22021).holds);
  CHECK_FALSE(lemma9_admissible(61).holds);
  for (int m = 1; m < 49; m += 2) CHECK_FALSE(lemma9_admissible(m).holds);
}

TEST_CASE("witness is present exactly when a verdict fails") {
  for (std::uint64_t m = 1; m < 2000; m += 2) {
    const auto v = lemma9_admissible(m);
    REQUIRE(v.holds != v.witness.has_value());
  }
  for (std::uint64_t k = 1; k < 3000; k += 2) {
    const auto v = lemma2_filter(factorize(k));
    REQUIRE(v.holds != v.witness.has_value());
  }
}

TEST_CASE("the Descartes number passes every check at once") {
  CHECK(is_descartes_pair(kD, kM));
  CHECK(is_cube_free(kD * kM));
  CHECK(lemma2_filter(kD).holds);
  CHECK(lemma5_check(kD, kM).holds);
  CHECK(lemma6_check(kD, kM).holds);
  CHECK(lemma9_admissible(kM.value()).holds);
}
