#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "descartes/crt.hpp"
#include "descartes/descartes.hpp"
#include "descartes/expression.hpp"
#include "descartes/lemmas.hpp"
#include "descartes/m_candidates.hpp"
#include "descartes/primes.hpp"
#include "descartes/replay.hpp"
#include "descartes/search.hpp"

namespace descartes::replay {

namespace {

constexpr std::array<std::pair<StepKind, std::string_view>, 8> kKindNames = {{
    {StepKind::InequalityCheck, "InequalityCheck"},
    {StepKind::CandidateEnumeration, "CandidateEnumeration"},
    {StepKind::FilterApplication, "FilterApplication"},
    {StepKind::IntegralityRefutation, "IntegralityRefutation"},
    {StepKind::EquationRefutation, "EquationRefutation"},
    {StepKind::DivisibilityForcing, "DivisibilityForcing"},
    {StepKind::MCandidateEnumeration, "MCandidateEnumeration"},
    {StepKind::AxiomCitation, "AxiomCitation"},
}};

// Input accessors bound to one step, so every failure names the step.
class Inputs {
 public:
  explicit Inputs(const CaseStep& step) : step_(step) {}

  [[noreturn]] void fail(const std::string& what) const { throw MalformedStep(step_.id, what); }

  const std::string& text(std::string_view name) const {
    const std::string* v = step_.find_input(name);
    if (v == nullptr) fail("missing input '" + std::string(name) + "'");
    return *v;
  }

  bool has(std::string_view name) const { return step_.find_input(name) != nullptr; }

  template <typename F>
  auto guarded(std::string_view name, F parse) const {
    try {
      return parse(text(name));
    } catch (const MalformedStep&) {
      throw;
    } catch (const std::exception& e) {
      fail("input '" + std::string(name) + "': " + e.what());
    }
  }

  Rational expr(std::string_view name) const {
    return guarded(name, [](const std::string& s) { return evaluate(s); });
  }

  Integer integer_expr(std::string_view name) const {
    const Rational r = expr(name);
    if (r.denominator() != 1) fail("input '" + std::string(name) + "' is not an integer");
    return r.numerator();
  }

  Factorization factorization(std::string_view name) const {
    return guarded(name, [](const std::string& s) { return Factorization::parse(s); });
  }

  std::vector<Integer> integers(std::string_view name) const {
    return guarded(name, [this](const std::string& s) { return parse_integer_list(s); });
  }

  std::vector<PrimePair> pairs(std::string_view name) const {
    const std::vector<Integer> flat = integers(name);
    if (flat.size() % 2 != 0) fail("input '" + std::string(name) + "' is not a list of pairs");
    std::vector<PrimePair> out;
    for (std::size_t i = 0; i < flat.size(); i += 2) {
      out.push_back({to_u64(flat[i]), to_u64(flat[i + 1])});
    }
    return out;
  }

  std::optional<unsigned> optional_residue(std::string_view name) const {
    if (!has(name)) return std::nullopt;
    return integer_expr(name).convert_to<unsigned>();
  }

  std::vector<Integer> optional_integers(std::string_view name) const {
    return has(name) ? integers(name) : std::vector<Integer>{};
  }

 private:
  static std::vector<Integer> parse_integer_list(const std::string& s) {
    std::vector<Integer> out;
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
        std::size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        out.push_back(parse_integer(std::string_view(s).substr(i, j - i)));
        i = j;
      } else if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || c == ' ') {
        ++i;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in list");
      }
    }
    return out;
  }

  const CaseStep& step_;
};

std::string format_list(const std::vector<Integer>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].str();
  }
  return out + "}";
}

std::string format_list(const std::vector<std::uint64_t>& values) {
  std::vector<Integer> v(values.begin(), values.end());
  return format_list(v);
}

std::string format_pair(const PrimePair& pr) {
  return "(" + std::to_string(pr.p) + ", " + std::to_string(pr.q) + ")";
}

std::string format_pairs(const std::vector<PrimePair>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_pair(pairs[i]);
  }
  return out + "}";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

LemmaVerdict cube_free_verdict(const Factorization& k) {
  std::vector<Integer> cubed;
  for (const auto& pp : k.powers()) {
    if (pp.exponent > 2) cubed.push_back(pp.prime);
  }
  if (cubed.empty()) return LemmaVerdict::pass("cube_free");
  return LemmaVerdict::fail("cube_free", "prime_cube_divides", std::move(cubed));
}

LemmaVerdict apply_k_filter(const Inputs& in, std::string_view filter, const Factorization& k) {
  if (filter == "lemma2") return lemma2_filter(k);
  if (filter == "cube_free") return cube_free_verdict(k);
  if (filter == "lemma4") return lemma4_check(k);
  in.fail("unknown k filter '" + std::string(filter) + "'");
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Factorization square_of(std::uint64_t p) {
  return Factorization::from_powers({{Integer(p), 2}});
}

StepResult inequality_check(const Inputs& in) {
  const Rational lhs = in.expr("lhs");
  const Rational rhs = in.expr("rhs");
  const std::string& rel = in.text("rel");
  const auto order = rational_cmp(lhs, rhs);
  bool holds = false;
  if (rel == "<") {
    holds = order < 0;
  } else if (rel == "<=") {
    holds = order <= 0;
  } else if (rel == ">") {
    holds = order > 0;
  } else if (rel == ">=") {
    holds = order >= 0;
  } else if (rel == "=") {
    holds = order == 0;
  } else if (rel == "!=") {
    holds = order != 0;
  } else {
    in.fail("unknown relation '" + rel + "'");
  }
  return {bool_text(holds), "lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs), false};
}

SearchConstraint search_constraint(const Inputs& in) {
  SearchConstraint c;
  c.base = in.factorization("base");
  c.m_lower = in.integer_expr("m_lower");
  c.residue_mod3 = in.optional_residue("residue_mod3");
  c.excluded_primes = in.optional_integers("exclude");
  return c;
}

StepResult candidate_enumeration(const Inputs& in) {
  const std::string& search = in.text("search");
  try {
    if (search == "pairs") {
      const auto pairs = pair_search(search_constraint(in));
      return {format_pairs(pairs), std::to_string(pairs.size()) + " pairs", false};
    }
    if (search == "single") {
      const auto primes = single_prime_search(search_constraint(in));
      return {format_list(primes), std::to_string(primes.size()) + " primes", false};
    }
    if (search == "interval") {
      const IntervalConstraint c{in.expr("lower"), in.expr("upper"),
                                 to_u64(in.integer_expr("p_min")),
                                 in.optional_residue("residue_mod3"),
                                 in.optional_integers("exclude")};
      const auto pairs = f_product_interval_search(c);
      return {format_pairs(pairs), std::to_string(pairs.size()) + " pairs", false};
    }
    if (search == "residue_class") {
      const Integer modulus = in.integer_expr("modulus");
      const Integer residue = in.integer_expr("residue");
      const Integer below = in.integer_expr("below");
      const bool odd_only = in.has("odd") && in.text("odd") == "true";
      const Congruence cls(residue, modulus);
      std::vector<Integer> out;
      for (Integer n = 1; n < below; ++n) {
        if (cls.contains(n) && (!odd_only || (n & 1) == 1)) out.push_back(n);
      }
      return {format_list(out), "positive n < " + below.str() + " with n = " + cls.to_string(),
              false};
    }
  } catch (const MalformedStep&) {
    throw;
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
  in.fail("unknown search '" + search + "'");
}

StepResult filter_application(const Inputs& in) {
  const std::string& target = in.text("target");
  if (target == "k_pairs") {
    const Factorization base = in.factorization("base");
    const auto filters = split_names(in.text("filters"));
    std::vector<PrimePair> survivors;
    std::string detail;
    for (const PrimePair& pr : in.pairs("pairs")) {
      const Factorization k = base * square_of(pr.p) * square_of(pr.q);
      bool kept = true;
      for (const auto& name : filters) {
        const LemmaVerdict v = apply_k_filter(in, name, k);
        if (!v.holds) {
          if (!detail.empty()) detail += "; ";
          detail += format_pair(pr) + " " + name + " " + to_string(v);
          kept = false;
          break;
        }
      }
      if (kept) survivors.push_back(pr);
    }
    return {format_pairs(survivors), detail, false};
  }
  if (target == "k") {
    const Factorization k = in.factorization("k");
    const LemmaVerdict v = apply_k_filter(in, in.text("filter"), k);
    return {to_string(v), "k = " + k.to_string(), false};
  }
  if (target == "m_values" || target == "m") {
    if (in.text("filter") != "lemma9") in.fail("m filters support only lemma9");
    if (target == "m") {
      const Integer m = in.integer_expr("m");
      return {to_string(lemma9_admissible(m)), "m = " + m.str(), false};
    }
    std::vector<Integer> survivors;
    std::string detail;
    for (const Integer& m : in.integers("values")) {
      const LemmaVerdict v = lemma9_admissible(m);
      if (v.holds) {
        survivors.push_back(m);
      } else {
        if (!detail.empty()) detail += "; ";
        detail += m.str() + " " + to_string(v);
      }
    }
    return {format_list(survivors), detail, false};
  }
  in.fail("unknown filter target '" + target + "'");
}

StepResult integrality_refutation(const Inputs& in) {
  const Factorization base = in.factorization("base");
  std::vector<std::pair<std::string, Factorization>> candidates;
  if (in.has("pairs")) {
    for (const PrimePair& pr : in.pairs("pairs")) {
      candidates.emplace_back(format_pair(pr), base * square_of(pr.p) * square_of(pr.q));
    }
  } else {
    for (const Integer& q : in.integers("primes")) {
      candidates.emplace_back(q.str(), base * square_of(to_u64(q)));
    }
  }
  std::string computed = "{";
  std::string detail;
  bool first = true;
  for (const auto& [label, k] : candidates) {
    const auto m = solve_m(k);
    if (!detail.empty()) detail += "; ";
    detail += label + ": k = " + k.value().str() + ", sigma(k) = " + sigma(k).str();
    if (m) {
      if (!first) computed += ", ";
      computed += label + " -> " + m->str();
      first = false;
    }
  }
  return {computed + "}", detail, false};
}

StepResult equation_refutation(const Inputs& in) {
  const std::string& mode = in.text("mode");
  if (mode == "pair") {
    const Integer lhs_coeff = in.integer_expr("lhs_coeff");
    const Integer rhs_coeff = in.integer_expr("rhs_coeff");
    const Integer p = in.integer_expr("p");
    const Integer q = in.integer_expr("q");
    if (!is_prime(p) || !is_prime(q)) in.fail("p and q must be prime");
    const Integer lhs = lhs_coeff * sigma_p_squared(p) * sigma_p_squared(q);
    const Integer rhs = rhs_coeff * p * p * q * q;
    return {lhs == rhs ? "equal" : "unequal", "lhs = " + lhs.str() + "; rhs = " + rhs.str(), false};
  }
  if (mode == "reduced") {
    // sigma(q^2) = c q^2 with sigma(q^2)/q^2 = 1 + 1/q + 1/q^2 > 1, decreasing in q.
    const Rational c = in.expr("coeff");
    std::vector<Integer> solutions;
    if (c > Rational(1)) {
      PrimeStream qs(2);
      for (std::uint64_t q = qs.next();; q = qs.next()) {
        const Rational ratio = f_of_p(Integer(q)).reciprocal();
        if (ratio < c) break;
        if (ratio == c) solutions.push_back(Integer(q));
      }
    }
    return {solutions.empty() ? "no prime solution" : "solutions " + format_list(solutions),
            "c = " + to_string(c), false};
  }
  in.fail("unknown equation mode '" + mode + "'");
}

std::vector<Congruence> parse_facts(const Inputs& in, const std::string& text) {
  // Facts separated by ';': "m = r (mod n)" or "d | m".
  std::vector<Congruence> facts;
  std::stringstream ss(text);
  std::string fact;
  while (std::getline(ss, fact, ';')) {
    try {
      if (const auto bar = fact.find('|'); bar != std::string::npos) {
        facts.push_back(Congruence::divisible_by(evaluate(fact.substr(0, bar)).numerator()));
        continue;
      }
      const auto eq = fact.find('=');
      const auto open = fact.find("(mod");
      const auto close = fact.find(')', open);
      if (eq == std::string::npos || open == std::string::npos || close == std::string::npos) {
        in.fail("unparseable fact '" + fact + "'");
      }
      const Rational r = evaluate(fact.substr(eq + 1, open - eq - 1));
      const Rational n = evaluate(fact.substr(open + 4, close - open - 4));
      facts.emplace_back(r.numerator(), n.numerator());
    } catch (const MalformedStep&) {
      throw;
    } catch (const std::exception& e) {
      in.fail("fact '" + fact + "': " + e.what());
    }
  }
  return facts;
}

StepResult divisibility_forcing(const Inputs& in) {
  const std::string& claim = in.text("claim");
  if (claim == "crt") {
    const auto facts = parse_facts(in, in.text("facts"));
    try {
      const Congruence c = forced_residue(facts);
      return {c.to_string(), "smallest positive member " + (c.residue == 0 ? c.modulus : c.residue).str(),
              false};
    } catch (const InconsistentCongruences& e) {
      return {"inconsistent", e.what(), false};
    }
  }
  if (claim == "divides") {
    const Integer d = in.integer_expr("divisor");
    const Integer v = in.integer_expr("value");
    if (d == 0) in.fail("zero divisor");
    return {bool_text(v % d == 0), "value = " + v.str(), false};
  }
  if (claim == "residue") {
    const Integer v = in.integer_expr("value");
    const Integer n = in.integer_expr("modulus");
    if (n <= 0) in.fail("modulus must be positive");
    return {mod_floor(v, n).str(), "value = " + v.str(), false};
  }
  if (claim == "prime") {
    const Integer v = in.integer_expr("value");
    return {is_prime(v) ? "prime" : "composite", "value = " + v.str(), false};
  }
  if (claim == "factor") {
    const Integer v = in.integer_expr("value");
    if (v < 1) in.fail("factor needs a positive value");
    return {factorize(v).to_string(), "value = " + v.str(), false};
  }
  in.fail("unknown claim '" + claim + "'");
}

StepResult m_candidate_enumeration(const Inputs& in) {
  std::vector<Integer> required = in.integers("required");
  const unsigned omega = in.integer_expr("omega").convert_to<unsigned>();
  try {
    if (omega > required.size()) {
      std::string out = "{";
      const auto shapes = enumerate_m_shapes(required, omega);
      for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (i > 0) out += ", ";
        out += shapes[i].to_string();
      }
      return {out + "}", std::to_string(shapes.size()) + " shapes", false};
    }
    const unsigned residue = in.integer_expr("residue_mod12").convert_to<unsigned>();
    std::vector<Integer> values = enumerate_m_candidates(required, omega, residue);
    std::string detail = "before filters " + format_list(values);
    if (in.has("filter")) {
      if (in.text("filter") != "lemma9") in.fail("m candidates support only the lemma9 filter");
      std::erase_if(values, [](const Integer& m) { return !lemma9_admissible(m).holds; });
    }
    return {format_list(values), detail, false};
  } catch (const MalformedStep&) {
    throw;
  } catch (const std::invalid_argument& e) {
    in.fail(e.what());
  }
}

StepResult dispatch(const CaseStep& step, const Inputs& in);

}  // namespace

std::string_view to_string(StepKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

StepKind parse_step_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown step kind '" + std::string(name) + "'");
}

const std::string* CaseStep::find_input(std::string_view name) const {
  for (const auto& f : inputs) {
    if (f.name == name) return &f.value;
  }
  return nullptr;
}

MalformedStep::MalformedStep(const std::string& step_id, const std::string& what)
    : std::invalid_argument(step_id + ": " + what), step_id_(step_id) {}

StepResult run_step(const CaseStep& step) {
  const Inputs in(step);
  StepResult r;
  try {
    r = dispatch(step, in);
  } catch (const MalformedStep&) {
    throw;
  } catch (const std::exception& e) {
    in.fail(e.what());
  }
  r.pass = step.kind == StepKind::AxiomCitation || r.computed == step.expected;
  return r;
}

namespace {

StepResult dispatch(const CaseStep& step, const Inputs& in) {
  StepResult r;
  switch (step.kind) {
    case StepKind::InequalityCheck:
      r = inequality_check(in);
      break;
    case StepKind::CandidateEnumeration:
      r = candidate_enumeration(in);
      break;
    case StepKind::FilterApplication:
      r = filter_application(in);
      break;
    case StepKind::IntegralityRefutation:
      r = integrality_refutation(in);
      break;
    case StepKind::EquationRefutation:
      r = equation_refutation(in);
      break;
    case StepKind::DivisibilityForcing:
      r = divisibility_forcing(in);
      break;
    case StepKind::MCandidateEnumeration:
      r = m_candidate_enumeration(in);
      break;
    case StepKind::AxiomCitation:
      if (step.expected != "cited") in.fail("an axiom citation can only expect 'cited'");
      r = {"cited", in.text("source") + ": " + in.text("statement"), true};
      break;
  }
  return r;
}

}  // namespace

}  // namespace descartes::replay
