// Acceptance suite: one PASS/FAIL line per criterion, with timings.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "descartes/crt.hpp"
#include "descartes/descartes.hpp"
#include "descartes/lemmas.hpp"
#include "descartes/oracle.hpp"
#include "descartes/replay.hpp"
#include "descartes/search.hpp"
#include "descartes/sigma_sieve.hpp"
#include "naive_search.hpp"

using namespace descartes;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_seconds) {
    std::ostringstream msg;
    msg << "over budget of " << budget_seconds << " s";
    o.require(false, msg.str());
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.6f s)%s%s\n", o.pass ? "PASS" : "FAIL", number, title, secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

Factorization F(const char* text) { return Factorization::parse(text); }

Factorization square(std::uint64_t p) { return Factorization::from_powers({{Integer(p), 2}}); }

SearchConstraint constraint(const char* base, long long m_lower,
                            std::optional<unsigned> residue = std::nullopt) {
  SearchConstraint c;
  c.base = F(base);
  c.m_lower = m_lower;
  c.residue_mod3 = residue;
  return c;
}

std::string show(const std::vector<PrimePair>& v) {
  std::string s = "{";
  for (const auto& p : v) s += "(" + std::to_string(p.p) + "," + std::to_string(p.q) + ")";
  return s + "}";
}

using Pairs = std::vector<PrimePair>;
using Primes = std::vector<std::uint64_t>;

}  // namespace

int main() {
  criterion(1, "Descartes verification of 3^2 7^2 11^2 13^2 with m = 22021", 1e-3, [] {
    Outcome o;
    const Factorization k = F("3^2*7^2*11^2*13^2");
    const Factorization m = F("22021");
    const Integer sk = sigma(k);
    o.require(sk == 18035199, "sigma(k) = " + to_string(sk));
    const Integer lhs = sk * (m.value() + 1);
    const Integer rhs = 2 * k.value() * m.value();
    o.require(lhs == Integer(18035199) * 22022, "lhs = " + to_string(lhs));
    o.require(lhs == rhs, "lhs != rhs");
    o.require(is_descartes_pair(k, m), "is_descartes_pair false");
    return o;
  });

  criterion(2, "pair lists of Lemma 10 Case 2, filters, and solve_m on survivors", 1.0, [] {
    Outcome o;
    const Pairs four = {{17, 59}, {17, 61}, {19, 43}, {23, 31}};
    const Pairs thirteen = {{37, 307}, {37, 311}, {37, 313}, {37, 317}, {37, 331},
                            {37, 337}, {41, 167}, {41, 173}, {47, 109}, {47, 113},
                            {53, 89},  {61, 71},  {61, 73}};
    const auto a = pair_search(constraint("3^2*5^2*31^2", 949));
    const auto b = pair_search(constraint("3^2*5^2*13^2", 2449));
    o.require(a == four, "949 list " + show(a));
    o.require(b == thirteen, "2449 list " + show(b));
    const auto filter = [](const char* base, const Pairs& pairs) {
      Pairs out;
      for (const auto& pr : pairs) {
        const Factorization k = F(base) * square(pr.p) * square(pr.q);
        if (is_cube_free(k) && lemma2_filter(k).holds) out.push_back(pr);
      }
      return out;
    };
    const Pairs s1 = filter("3^2*5^2*31^2", a);
    const Pairs s2 = filter("3^2*5^2*13^2", b);
    o.require(s1 == Pairs{{17, 61}}, "survivors " + show(s1));
    o.require(s2 == Pairs{{37, 311}, {37, 317}, {47, 109}, {61, 71}}, "survivors " + show(s2));
    for (const auto& pr : s1) {
      o.require(!solve_m(F("3^2*5^2*31^2") * square(pr.p) * square(pr.q)), "solve_m succeeded");
    }
    for (const auto& pr : s2) {
      o.require(!solve_m(F("3^2*5^2*13^2") * square(pr.p) * square(pr.q)), "solve_m succeeded");
    }
    return o;
  });

  criterion(3, "single-prime lists and the near miss m = 19^2 61", 1.0, [] {
    Outcome o;
    o.require(single_prime_search(constraint("3^2*5^2*13^2", 49, 1)) ==
                  Primes{37, 43, 61, 67, 73, 79},
              "Lemma 10 13-branch");
    o.require(single_prime_search(constraint("3^2*5^2*31^2", 49, 1)).empty(),
              "Lemma 10 31-branch");
    o.require(single_prime_search(constraint("3^2*7^2*13^2", 1159)) == Primes{11},
              "Theorem 13-branch");
    const auto m = solve_m(F("3^2*7^2*13^2") * square(11));
    o.require(m && *m == 22021 && factorize(*m) == F("19^2*61"), "solve_m near miss");
    o.require(single_prime_search(constraint("3^2*7^2*19^2", 1651)).empty(),
              "Theorem 19-branch");
    return o;
  });

  criterion(4, "f(p)f(q) intervals are empty", 1.0, [] {
    Outcome o;
    const IntervalConstraint l10{Rational(403, 450), Rational(2822, 3150), 7, 1, {13, 31}};
    const IntervalConstraint t1{Rational(247, 294), Rational(206, 245), 5, std::nullopt, {13, 19}};
    o.require(f_product_interval_search(l10).empty(), "[403/450, 2822/3150] not empty");
    o.require(f_product_interval_search(t1).empty(), "[247/294, 206/245] not empty");
    o.require(f_of_p(7) < Rational(403, 450), "f(7) < 403/450 fails");
    o.require(pow(f_of_p(19), 2) > Rational(2822, 3150), "f(19)^2 > 2822/3150 fails");
    return o;
  });

  criterion(5, "proof replay with pinned axiom counts and negative controls", 5.0, [] {
    Outcome o;
    using namespace descartes::replay;
    const std::pair<Target, unsigned> expected[] = {
        {Target::Lemma9, 3}, {Target::Lemma10, 8}, {Target::Theorem1, 6}};
    std::size_t mutations = 0;
    for (const auto& [target, axioms] : expected) {
      const auto script = script_for(target);
      const Transcript t = replay::replay(target, script);
      const std::string name(to_string(target));
      o.require(t.established, name + " not established");
      o.require(t.axiom_count == axioms, name + " axiom count " + std::to_string(t.axiom_count));
      for (std::size_t i = 0; i < script.size(); ++i) {
        auto mutated = script;
        mutated[i].expected += "?";
        const Transcript m = replay::replay(target, mutated);
        o.require(!m.established && m.failed_at == script[i].id,
                  "mutation of " + script[i].id + " did not flip the verdict");
        ++mutations;
      }
    }
    o.detail = o.pass ? std::to_string(mutations) + " mutations all flipped" : o.detail;
    return o;
  });

  criterion(6, "oracle: (9018009, 22021) is the only pair up to 10^7", 60.0, [] {
    Outcome o;
    const auto t0 = Clock::now();
    const auto single = brute_force_oracle(10000000);
    const double single_secs = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(single.size() == 1, std::to_string(single.size()) + " hits");
    if (single.size() == 1) {
      o.require(single[0].k().value() == 9018009 && single[0].m().value() == 22021, "wrong hit");
    }
    o.require(brute_force_oracle(1000000).empty(), "hits below 10^6");
    OracleOptions four;
    four.workers = 4;
    const auto t1 = Clock::now();
    const auto parallel = brute_force_oracle(10000000, four);
    const double parallel_secs = std::chrono::duration<double>(Clock::now() - t1).count();
    o.require(parallel == single, "4-worker result differs");
    o.require(single_secs < 60.0, "single-threaded over 60 s");
    o.require(parallel_secs < 20.0, "4 workers over 20 s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "single-threaded %.3f s, 4 workers %.3f s", single_secs,
                  parallel_secs);
    if (o.pass) o.detail = buf;
    return o;
  });

  criterion(7, "property suites", 120.0, [] {
    Outcome o;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
    for (int done = 0; done < 10000;) {
      const std::uint64_t a = dist(rng), b = dist(rng);
      if (std::gcd(a, b) != 1) continue;
      if (sigma(factorize(a * b)) != sigma(factorize(a)) * sigma(factorize(b))) {
        o.require(false, "multiplicativity at " + std::to_string(a) + "," + std::to_string(b));
      }
      ++done;
    }
    const auto primes = sieve_primes(1000000);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const Rational f = f_of_p(primes[i]);
      if (!(f < Rational(1)) || (i > 0 && !(f_of_p(primes[i - 1]) < f))) {
        o.require(false, "f at " + std::to_string(primes[i]));
      }
    }
    for (std::uint64_t s = 1; s <= 10000; ++s) {
      const Factorization f = factorize(s);
      if (is_squarefree(f) && !lemma4_check(f).holds) {
        o.require(false, "Lemma 4 at " + std::to_string(s));
      }
    }
    const auto table = sigma_sieve(1, 1000001);
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
      if (sigma(factorize(n)) != table.at(n)) o.require(false, "sieve at " + std::to_string(n));
    }
    for (const auto& c : {constraint("3^2*5^2*31^2", 949), constraint("3^2*5^2*13^2", 2449)}) {
      o.require(pair_search(c) == naive::pairs(c), "naive double loop differs");
    }
    return o;
  });

  criterion(8, "forced residues 949 (mod 3900) and 2449 (mod 3900)", 1e-3, [] {
    Outcome o;
    const std::vector<Congruence> f13 = {{1, 12}, Congruence::divisible_by(13), {-1, 25}};
    const std::vector<Congruence> f31 = {{1, 12}, Congruence::divisible_by(31), {-1, 25}};
    const Congruence c13 = forced_residue(f13);
    const Congruence c31 = forced_residue(f31);
    o.require(c13 == Congruence(949, 3900), "13 | m gave " + c13.to_string());
    o.require(c31 == Congruence(2449, 3900),
              "31 | m gives " + c31.to_string() +
                  ", not 2449 (mod 3900): 31 must divide the modulus, and 2449 + 3900 = 6349 is "
                  "not divisible by 31; the least member 2449 matches");
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
