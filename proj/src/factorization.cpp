#include "descartes/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "descartes/primes.hpp"

namespace descartes {

namespace {

constexpr std::uint64_t kSmallBound = 1U << 16;
constexpr std::uint64_t kTrialBound = 1U << 20;

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = sieve_primes(kSmallBound);
  return primes;
}

// Primes in (2^16, 2^20), built only when a cofactor survives the small table.
const std::vector<std::uint64_t>& large_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> all = sieve_primes(kTrialBound);
    all.erase(all.begin(), std::upper_bound(all.begin(), all.end(), kSmallBound));
    return all;
  }();
  return primes;
}

// Divides out every trial prime p with p^2 <= rem, appending to out.
template <typename T>
void trial_divide(T& rem, std::vector<PrimePower>& out) {
  const auto run = [&](const std::vector<std::uint64_t>& primes) {
    for (std::uint64_t p : primes) {
      if (T(p) * p > rem) return true;
      if (rem % p != 0) continue;
      unsigned e = 0;
      do {
        rem /= p;
        ++e;
      } while (rem % p == 0);
      out.push_back({Integer(p), e});
    }
    return false;
  };
  if (!run(small_primes())) run(large_primes());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Factorization Factorization::from_powers(std::vector<PrimePower> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  Factorization out;
  for (auto& pp : powers) {
    if (pp.exponent == 0) {
      throw std::invalid_argument("zero exponent on " + pp.prime.str());
    }
    if (!out.powers_.empty() && out.powers_.back().prime == pp.prime) {
      out.powers_.back().exponent += pp.exponent;
      continue;
    }
    if (!is_prime(pp.prime)) {
      throw std::invalid_argument(pp.prime.str() + " is not prime");
    }
    out.powers_.push_back(std::move(pp));
  }
  return out;
}

Factorization Factorization::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) {
    throw std::invalid_argument("empty factorization literal");
  }
  if (text.find_first_of("^*") == std::string_view::npos) {
    const Integer n = parse_integer(text);
    if (n <= 0) {
      throw std::invalid_argument("expected a positive integer, got " + n.str());
    }
    return factorize(n);
  }
  std::vector<PrimePower> powers;
  while (!text.empty()) {
    const auto star = text.find('*');
    const std::string_view term = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (term.empty()) {
      throw std::invalid_argument("empty factor in factorization literal");
    }
    const auto caret = term.find('^');
    const Integer base = parse_integer(trim(term.substr(0, caret)));
    Integer exponent = 1;
    if (caret != std::string_view::npos) {
      exponent = parse_integer(trim(term.substr(caret + 1)));
    }
    if (exponent < 1 || exponent > 4096) {
      throw std::invalid_argument("exponent out of range in '" + std::string(term) + "'");
    }
    if (base == 1) {
      continue;  // allows "1" and "1^e" as the empty product
    }
    powers.push_back({base, exponent.convert_to<unsigned>()});
  }
  return from_powers(std::move(powers));
}

unsigned Factorization::exponent_of(const Integer& prime) const {
  for (const auto& pp : powers_) {
    if (pp.prime == prime) return pp.exponent;
    if (pp.prime > prime) break;
  }
  return 0;
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& pp : powers_) v *= ipow(pp.prime, pp.exponent);
  return v;
}

std::string Factorization::to_string() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& pp : powers_) {
    if (!out.empty()) out += '*';
    out += pp.prime.str();
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  Factorization out;
  auto ia = a.powers_.begin();
  auto ib = b.powers_.begin();
  while (ia != a.powers_.end() || ib != b.powers_.end()) {
    if (ib == b.powers_.end() || (ia != a.powers_.end() && ia->prime < ib->prime)) {
      out.powers_.push_back(*ia++);
    } else if (ia == a.powers_.end() || ib->prime < ia->prime) {
      out.powers_.push_back(*ib++);
    } else {
      out.powers_.push_back({ia->prime, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Factorization factorize(const Integer& n) {
  if (n <= 0) {
    throw std::invalid_argument("factorize requires n >= 1, got " + n.str());
  }
  Factorization out;
  if (fits_u64(n)) {
    std::uint64_t rem = n.convert_to<std::uint64_t>();
    trial_divide(rem, out.powers_);
    if (rem > 1) {
      if (rem > kTrialBound * kTrialBound && !is_prime(rem)) {
        throw std::domain_error("cannot factor " + n.str() + ": composite cofactor " +
                                std::to_string(rem) + " has no prime factor below 2^20");
      }
      out.powers_.push_back({Integer(rem), 1});
    }
    return out;
  }
  Integer rem = n;
  trial_divide(rem, out.powers_);
  if (rem > 1) {
    if (rem > Integer(kTrialBound) * kTrialBound && !is_prime(rem)) {
      throw std::domain_error("cannot factor " + n.str() + ": composite cofactor " + rem.str() +
                              " has no prime factor below 2^20");
    }
    out.powers_.push_back({rem, 1});
  }
  return out;
}

Integer sigma(const Factorization& f) {
  Integer s = 1;
  for (const auto& pp : f.powers()) {
    s *= (ipow(pp.prime, pp.exponent + 1) - 1) / (pp.prime - 1);
  }
  return s;
}

Rational abundancy(const Factorization& f) { return Rational(sigma(f), f.value()); }

Integer sigma_p_squared(const Integer& p) { return p * p + p + 1; }

Rational f_of_p(const Integer& p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("f(p) needs a prime, got " + p.str());
  }
  return Rational(p * p, sigma_p_squared(p));
}

}  // namespace descartes
