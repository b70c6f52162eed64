// Case scripts for the replayed proofs. Each entry is one claim of the
// argument, written as data; run_step re-derives it from the inputs.

#include "descartes/replay.hpp"

namespace descartes::replay {

namespace {

class Script {
 public:
  Script& axiom(std::string id, std::string anchor, std::string source, std::string statement,
                std::string note = {}) {
    return add(std::move(id), StepKind::AxiomCitation, std::move(anchor),
               {{"source", std::move(source)}, {"statement", std::move(statement)}}, "cited",
               std::move(note));
  }

  Script& check(std::string id, std::string anchor, std::string lhs, std::string rel,
                std::string rhs, std::string note = {}) {
    return add(std::move(id), StepKind::InequalityCheck, std::move(anchor),
               {{"lhs", std::move(lhs)}, {"rel", std::move(rel)}, {"rhs", std::move(rhs)}}, "true",
               std::move(note));
  }

  Script& add(std::string id, StepKind kind, std::string anchor, std::vector<Field> inputs,
              std::string expected, std::string note = {}) {
    steps_.push_back({std::move(id), kind, std::move(anchor), std::move(inputs),
                      std::move(expected), std::move(note)});
    return *this;
  }

  Script& prime(std::string id, std::string anchor, std::string value, std::string note = {}) {
    return add(std::move(id), StepKind::DivisibilityForcing, std::move(anchor),
               {{"claim", "prime"}, {"value", std::move(value)}}, "prime", std::move(note));
  }

  Script& divides(std::string id, std::string anchor, std::string divisor, std::string value,
                  bool expected, std::string note = {}) {
    return add(std::move(id), StepKind::DivisibilityForcing, std::move(anchor),
               {{"claim", "divides"}, {"divisor", std::move(divisor)}, {"value", std::move(value)}},
               expected ? "true" : "false", std::move(note));
  }

  Script& residue(std::string id, std::string anchor, std::string value, std::string modulus,
                  std::string expected, std::string note = {}) {
    return add(std::move(id), StepKind::DivisibilityForcing, std::move(anchor),
               {{"claim", "residue"}, {"value", std::move(value)}, {"modulus", std::move(modulus)}},
               std::move(expected), std::move(note));
  }

  Script& factor(std::string id, std::string anchor, std::string value, std::string expected,
                 std::string note = {}) {
    return add(std::move(id), StepKind::DivisibilityForcing, std::move(anchor),
               {{"claim", "factor"}, {"value", std::move(value)}}, std::move(expected),
               std::move(note));
  }

  Script& pair_refutation(std::string id, std::string anchor, std::string lhs_coeff,
                          std::string rhs_coeff, std::string p, std::string q,
                          std::string note = {}) {
    return add(std::move(id), StepKind::EquationRefutation, std::move(anchor),
               {{"mode", "pair"},
                {"lhs_coeff", std::move(lhs_coeff)},
                {"rhs_coeff", std::move(rhs_coeff)},
                {"p", std::move(p)},
                {"q", std::move(q)}},
               "unequal", std::move(note));
  }

  Script& m_values(std::string id, std::string anchor, std::string required, std::string omega,
                   std::string expected, bool lemma9 = false, std::string note = {}) {
    std::vector<Field> in{{"required", std::move(required)},
                          {"omega", std::move(omega)},
                          {"residue_mod12", "1"}};
    if (lemma9) in.push_back({"filter", "lemma9"});
    return add(std::move(id), StepKind::MCandidateEnumeration, std::move(anchor), std::move(in),
               std::move(expected), std::move(note));
  }

  std::vector<CaseStep> done() { return std::move(steps_); }

 private:
  std::vector<CaseStep> steps_;
};

constexpr const char* kNielsen = "Nielsen, Lemma 1";

}  // namespace

std::vector<CaseStep> lemma9_script() {
  const std::string a = "Lemma 9 proof";
  Script s;
  s.axiom("L9.1", a, kNielsen, "every odd perfect number has at least nine distinct prime divisors",
          "with m prime, sigma(km) = 2km would make n an odd perfect number with fewer than nine "
          "prime divisors");
  s.axiom("L9.2", a, "Banks et al., Lemma 5",
          "a cube-free Descartes number n = km has m = 1 (mod 12) and gcd(k, m) = 1");
  s.axiom("L9.3", a, "Banks et al., Lemmas 4 and 6",
          "k = s^2 with s squarefree, m | sigma(s^2), and sigma(s^2) has no prime divisor "
          "q = 2 (mod 3)");
  s.add("L9.4", StepKind::CandidateEnumeration, a,
        {{"search", "residue_class"}, {"modulus", "12"}, {"residue", "1"}, {"below", "49"}},
        "{1, 13, 25, 37}", "every m below 49 allowed by m = 1 (mod 12)");
  s.prime("L9.5", a, "13");
  s.prime("L9.6", a, "37");
  s.add("L9.7", StepKind::FilterApplication, a,
        {{"target", "m"}, {"filter", "lemma9"}, {"m", "13"}}, "fails: m_prime {13}");
  s.add("L9.8", StepKind::FilterApplication, a,
        {{"target", "m"}, {"filter", "lemma9"}, {"m", "37"}}, "fails: m_prime {37}");
  s.check("L9.9", a + ", m = 1", "2*1/(1+1)", "=", "1",
          "m = 1 forces sigma(k)/k = 2m/(m+1) = 1, i.e. sigma(k) = k, impossible for k > 1");
  s.add("L9.10", StepKind::FilterApplication, a + ", m = 1",
        {{"target", "m"}, {"filter", "lemma9"}, {"m", "1"}}, "fails: m_is_1 {1}");
  s.residue("L9.11", a + ", m = 25", "5", "3", "2",
            "25 | m | sigma(s^2) would put the prime 5 = 2 (mod 3) into sigma(s^2)");
  s.add("L9.12", StepKind::FilterApplication, a + ", m = 25",
        {{"target", "m"}, {"filter", "lemma9"}, {"m", "25"}}, "fails: m_is_25 {25}");
  s.add("L9.13", StepKind::FilterApplication, a,
        {{"target", "m_values"}, {"filter", "lemma9"}, {"values", "{1, 13, 25, 37}"}}, "{}",
        "no m below 49 survives");
  s.add("L9.14", StepKind::FilterApplication, a,
        {{"target", "m"}, {"filter", "lemma9"}, {"m", "49"}}, "holds",
        "49 = 7^2 is the first admissible value");
  return s.done();
}

std::vector<CaseStep> lemma10_script() {
  const std::string a = "Lemma 10";
  const std::string c1 = "Lemma 10 Case 1";
  const std::string c2 = "Lemma 10 Case 2";
  const std::string c3 = "Lemma 10 Case 3";
  Script s;
  s.axiom("L10.1", a, "Banks et al., Lemma 7",
          "a Descartes number with 3 not dividing n has over a million prime divisors, so 3 | n");
  s.axiom("L10.2", a, "Banks et al., Lemma 5", "gcd(k, m) = 1, so omega(k) + omega(m) = 7");
  s.axiom("L10.3", a, "Banks et al., Lemma 3", "omega(k) >= 4, leaving omega(m) in {1, 2, 3}",
          "the three-way split is encoded directly; the cited statement only gives omega(k) >= 4");
  s.axiom("L10.4", a, "Banks et al., Lemma 6", "k = s^2 for a squarefree s");
  s.axiom("L10.5", a, "Banks et al., Lemma 2",
          "3 | k and exactly two primes p | k have p = 1 (mod 3)");
  s.axiom("L10.6", a, "Banks et al., Lemma 4",
          "sigma(s^2) has no prime divisor q = 2 (mod 3)");

  s.axiom("L10.C1.1", c1, "Banks et al., extended with " + std::string(kNielsen),
          "omega(m) = 1 admits no k with 5 | k for omega(k) = 4, 5, 6, 7");

  s.axiom("L10.C2.1", c2, "Banks et al., extended with " + std::string(kNielsen),
          "omega(m) = 2 and 5 | k force 13 | m, 31 | k or 31 | m, 13 | k (omega(k) = 4, 5, 6)");
  s.residue("L10.C2.2", c2, "5", "3", "2",
            "5^2 | k while 5 does not divide sigma(k) (Lemma 4), so 25 | m + 1");
  s.add("L10.C2.3", StepKind::DivisibilityForcing, c2 + ", 13 | m",
        {{"claim", "crt"}, {"facts", "m = 1 (mod 12); 13 | m; m = -1 (mod 25)"}},
        "949 (mod 3900)");
  s.add("L10.C2.4", StepKind::CandidateEnumeration, c2 + ", 13 | m",
        {{"search", "pairs"}, {"base", "3^2*5^2*31^2"}, {"m_lower", "949"}},
        "{(17, 59), (17, 61), (19, 43), (23, 31)}",
        "2*949/950 <= sigma(3^2*5^2*31^2)/(3^2*5^2*31^2) / (f(p)f(q)) < 2");
  s.add("L10.C2.5", StepKind::FilterApplication, c2 + ", 13 | m",
        {{"target", "k_pairs"},
         {"base", "3^2*5^2*31^2"},
         {"pairs", "{(17, 59), (17, 61), (19, 43), (23, 31)}"},
         {"filters", "lemma2, cube_free"}},
        "{(17, 61)}");
  s.add("L10.C2.6", StepKind::IntegralityRefutation, c2 + ", 13 | m",
        {{"base", "3^2*5^2*31^2"}, {"pairs", "{(17, 61)}"}}, "{}");
  s.add("L10.C2.7", StepKind::DivisibilityForcing, c2 + ", 31 | m",
        {{"claim", "crt"}, {"facts", "m = 1 (mod 12); 31 | m; m = -1 (mod 25)"}},
        "2449 (mod 9300)",
        "2449 (mod 3900) is not a solution class since 31 | m puts 31 into the modulus; the bound "
        "m >= 2449 used below is unaffected");
  s.add("L10.C2.8", StepKind::CandidateEnumeration, c2 + ", 31 | m",
        {{"search", "pairs"}, {"base", "3^2*5^2*13^2"}, {"m_lower", "2449"}},
        "{(37, 307), (37, 311), (37, 313), (37, 317), (37, 331), (37, 337), (41, 167), "
        "(41, 173), (47, 109), (47, 113), (53, 89), (61, 71), (61, 73)}");
  s.add("L10.C2.9", StepKind::FilterApplication, c2 + ", 31 | m",
        {{"target", "k_pairs"},
         {"base", "3^2*5^2*13^2"},
         {"pairs",
          "{(37, 307), (37, 311), (37, 313), (37, 317), (37, 331), (37, 337), (41, 167), "
          "(41, 173), (47, 109), (47, 113), (53, 89), (61, 71), (61, 73)}"},
         {"filters", "lemma2, cube_free"}},
        "{(37, 311), (37, 317), (47, 109), (61, 71)}");
  s.add("L10.C2.10", StepKind::IntegralityRefutation, c2 + ", 31 | m",
        {{"base", "3^2*5^2*13^2"}, {"pairs", "{(37, 311), (37, 317), (47, 109), (61, 71)}"}}, "{}");

  s.check("L10.C3.1", c3, "sigma(3^2*5^2)", "=", "13*31",
          "k = 3^2*5^2*p^2*q^2 gives 13*31*sigma(p^2)sigma(q^2)(m+1) = 2*3^2*5^2*p^2*q^2*m");
  s.check("L10.C3.2", c3 + ", p = 13", "abund(3^2*5^2*13^2)", "=", "31*61/(3*5^2*13)");
  s.add("L10.C3.3", StepKind::CandidateEnumeration, c3 + ", p = 13",
        {{"search", "single"}, {"base", "3^2*5^2*13^2"}, {"m_lower", "49"}, {"residue_mod3", "1"}},
        "{37, 43, 61, 67, 73, 79}", "2*49/50 <= 31*61/(3*5^2*13*f(q)) < 2, q = 1 (mod 3)");
  s.add("L10.C3.4", StepKind::IntegralityRefutation, c3 + ", p = 13",
        {{"base", "3^2*5^2*13^2"}, {"primes", "{37, 43, 61, 67, 73, 79}"}}, "{}");
  s.check("L10.C3.5", c3 + ", p = 31", "abund(3^2*5^2*31^2)", "=", "13*331/(3*5^2*31)");
  s.add("L10.C3.6", StepKind::CandidateEnumeration, c3 + ", p = 31",
        {{"search", "single"}, {"base", "3^2*5^2*31^2"}, {"m_lower", "49"}, {"residue_mod3", "1"}},
        "{}", "2*49/50 <= 13*331/(3*5^2*31*f(q)) < 2 has no admissible q");
  s.add("L10.C3.7", StepKind::MCandidateEnumeration, c3 + ", 13*31 | m",
        {{"required", "{13, 31}"}, {"omega", "3"}},
        "{13*31*t, 13^2*31*t, 13*31^2*t, 13^2*31^2*t}",
        "t >= 7 is a prime or the square of a prime");
  s.check("L10.C3.8", c3 + ", 13*31 | m", "sigma(3^2*5^2)/(2*3^2*5^2)", "=", "403/450",
          "f(p)f(q) = 403/450 * (m+1)/m decreases toward 403/450");
  s.check("L10.C3.9", c3 + ", 13*31 | m", "sigma(3^2*5^2)/(2*3^2*5^2)*(13*31*7+1)/(13*31*7)", "=",
          "2822/3150", "largest value, at m = 13*31*7");
  s.check("L10.C3.10", c3 + ", p = 7", "f(7)", "<", "403/450",
          "with f(q) < 1, p = 7 cannot reach the interval");
  s.check("L10.C3.11", c3 + ", p >= 19", "f(19)^2", ">", "2822/3150",
          "f(p)f(q) > f(19)^2 once p >= 19");
  s.add("L10.C3.12", StepKind::CandidateEnumeration, c3 + ", 13*31 | m",
        {{"search", "interval"},
         {"lower", "403/450"},
         {"upper", "2822/3150"},
         {"p_min", "7"},
         {"residue_mod3", "1"},
         {"exclude", "{13, 31}"}},
        "{}");
  return s.done();
}

std::vector<CaseStep> theorem1_script() {
  const std::string a = "Theorem 1";
  const std::string c1 = "Theorem 1 Case 1";
  const std::string c2 = "Theorem 1 Case 2";
  const std::string c3 = "Theorem 1 Case 3";
  Script s;
  s.axiom("T1.1", a, "Banks et al., Lemma 7",
          "a Descartes number with 3 not dividing n has over a million prime divisors, so 3 | n");
  s.axiom("T1.2", a, "Banks et al., Lemma 3", "omega(k) >= 4, leaving omega(m) in {1, 2, 3}",
          "the three-way split is encoded directly; the cited statement only gives omega(k) >= 4");
  s.axiom("T1.3", a, "Banks et al., Lemma 2",
          "3 | k and exactly two primes p | k have p = 1 (mod 3)");
  s.axiom("T1.4", a, "Banks et al., Lemma 4",
          "sigma(s^2) has no prime divisor q = 2 (mod 3)");
  s.axiom("T1.5", a, "Banks et al., Lemma 5", "m = 1 (mod 12) and gcd(k, m) = 1");
  s.axiom("T1.6", a, "Banks et al., Lemma 6", "k = s^2 for a squarefree s");

  // omega(m) = 1, omega(k) = 6
  s.check("T1.C1.1", c1, "abund(3^2*13^2*17^2*19^2*23^2*29^2)", "<", "2*49/50",
          "largest abundancy of six odd primes avoiding 5, 7, 11; m >= 49 needs 2m/(m+1) >= 2*49/50");
  s.check("T1.C1.2", c1 + ", 7 | k", "abund(3^2*7^2)", "=", "13*19/(3*7^2)",
          "13*19*sigma(l^2)(m+1) = 2*3*7^2*l^2*m");
  s.m_values("T1.C1.3", c1 + ", 7 | k", "{13}", "1", "{169}", true);
  s.m_values("T1.C1.4", c1 + ", 7 | k", "{19}", "1", "{361}", true);
  s.divides("T1.C1.5", c1 + ", m = 13^2", "5", "13^2+1", true);
  s.divides("T1.C1.6", c1 + ", m = 13^2", "5", "2*3*7^2*13^2", false,
            "so 5 | l, hence 5 | k, contradicting Lemma 10");
  s.factor("T1.C1.7", c1 + ", m = 19^2", "19^2+1", "2*181");
  s.divides("T1.C1.8", c1 + ", m = 19^2", "13", "2*3*7^2*19^2", false, "so 13 | l");
  s.divides("T1.C1.9", c1 + ", m = 19^2", "181", "2*3*7^2*19^2", false, "so 181 | l");
  s.add("T1.C1.10", StepKind::FilterApplication, c1 + ", m = 19^2",
        {{"target", "k"}, {"filter", "lemma2"}, {"k", "3^2*7^2*13^2*181^2"}},
        "fails: residue_1_prime_count {7, 13, 181}");
  s.check("T1.C1.11", c1 + ", 11 | k", "abund(3^2*11^2)", "=", "13*7*19/(3^2*11^2)",
          "13*7*19*sigma(l^2)(m+1) = 2*3^2*11^2*l^2*m");
  s.m_values("T1.C1.12", c1 + ", 11 | k", "{7}", "1", "{49}", true,
             "read 'not all of 7, 13, and 19 cannot divide l' as: at most two of 7, 13, 19 "
             "divide l, so m is one of 7^2, 13^2, 19^2");
  s.divides("T1.C1.13", c1 + ", 11 | k", "11^2", "7^2+1", false);
  s.divides("T1.C1.14", c1 + ", 11 | k", "11^2", "13^2+1", false);
  s.divides("T1.C1.15", c1 + ", 11 | k", "11^2", "19^2+1", false);
  s.divides("T1.C1.16", c1 + ", 11 | k", "11", "13*7*19", false,
            "so 11 | sigma(l^2)");
  s.residue("T1.C1.17", c1 + ", 11 | k", "11", "3", "2",
            "11 | sigma(l^2) contradicts Lemma 4");

  // omega(m) = 2, omega(k) = 5
  s.check("T1.C2.1", c2, "abund(3^2*11^2*13^2*17^2*19^2)", "<", "2*49/50",
          "without 7 the abundancy is too small for m >= 49, so 7 | k");
  s.check("T1.C2.2", c2, "abund(3^2*7^2)", "=", "13*19/(3*7^2)",
          "13*19*sigma(l^2)(m+1) = 2*3*7^2*l^2*m");
  s.m_values("T1.C2.3", c2 + ", 13*19 | m", "{13, 19}", "2", "{4693, 61009}");
  s.check("T1.C2.4", c2 + ", m = 13*19^2", "2*3*7^2*4693/(13*19*(4693+1))", "=",
          "3*7^2*19/2347", "2347*sigma(l^2) = 3*7^2*19*l^2");
  s.prime("T1.C2.5", c2 + ", m = 13*19^2", "2347");
  s.divides("T1.C2.6", c2 + ", m = 13*19^2", "2347", "3*7^2*19", false, "so l = 2347*p*q");
  s.factor("T1.C2.7", c2 + ", m = 13*19^2", "sigma(2347^2)", "3*7*397*661");
  s.check("T1.C2.8", c2 + ", m = 13*19^2", "3*7^2*19*2347^2/(2347*sigma(2347^2))", "=",
          "7*19*2347/(397*661)", "397*661*sigma(p^2)sigma(q^2) = 7*19*2347*p^2*q^2");
  s.prime("T1.C2.9", c2 + ", m = 13*19^2", "397");
  s.prime("T1.C2.10", c2 + ", m = 13*19^2", "661", "so {p, q} = {397, 661}");
  s.pair_refutation("T1.C2.11", c2 + ", m = 13*19^2", "397*661", "7*19*2347", "397", "661");
  s.divides("T1.C2.12", c2 + ", m = 13^2*19^2", "5", "13^2*19^2+1", true);
  s.divides("T1.C2.13", c2 + ", m = 13^2*19^2", "5", "2*3*7^2*13*19", false,
            "so 5 | l, hence 5 | k, contradicting Lemma 10");
  s.check("T1.C2.14", c2 + ", 19 | l", "2*3*7^2*19^2/(13*19*sigma(19^2))", "=",
          "2*7^2*19/(13*127)", "13*127*sigma(p^2)sigma(q^2)(m+1) = 2*7^2*19*p^2*q^2*m");
  s.residue("T1.C2.15", c2 + ", 19 | l", "13", "3", "1");
  s.residue("T1.C2.16", c2 + ", 19 | l", "127", "3", "1",
            "p, q = 2 (mod 3) by Lemma 2, so 13*127 | m");
  s.m_values("T1.C2.17", c2 + ", 19 | l", "{13, 127}", "2", "{209677, 2725801}");
  s.check("T1.C2.18", c2 + ", m = 13*127^2", "2*7^2*19*209677/(13*127*(209677+1))", "=",
          "7*19*127/(17*881)", "17*881*sigma(p^2)sigma(q^2) = 7*19*127*p^2*q^2");
  s.prime("T1.C2.19", c2 + ", m = 13*127^2", "17");
  s.prime("T1.C2.20", c2 + ", m = 13*127^2", "881");
  s.pair_refutation("T1.C2.21", c2 + ", m = 13*127^2", "17*881", "7*19*127", "17", "881");
  s.check("T1.C2.22", c2 + ", m = 13^2*127^2", "2*7^2*19*2725801/(13*127*(2725801+1))", "=",
          "7^2*13*19*127/(397*3433)", "397*3433*sigma(p^2)sigma(q^2) = 7^2*13*19*127*p^2*q^2");
  s.prime("T1.C2.23", c2 + ", m = 13^2*127^2", "3433");
  s.pair_refutation("T1.C2.24", c2 + ", m = 13^2*127^2", "397*3433", "7^2*13*19*127", "397",
                    "3433");
  s.check("T1.C2.25", c2 + ", 13 | l", "2*3*7^2*13^2/(13*19*sigma(13^2))", "=",
          "2*7^2*13/(19*61)", "19*61*sigma(p^2)sigma(q^2)(m+1) = 2*7^2*13*p^2*q^2*m");
  s.residue("T1.C2.26", c2 + ", 13 | l", "19", "3", "1");
  s.residue("T1.C2.27", c2 + ", 13 | l", "61", "3", "1", "so 19*61 | m");
  s.m_values("T1.C2.28", c2 + ", 13 | l", "{19, 61}", "2", "{22021, 1343281}");
  s.check("T1.C2.29", c2 + ", m = 19^2*61^2", "2*7^2*13*1343281/(19*61*(1343281+1))", "=",
          "7^2*13*19*61/(337*1993)", "337*1993*sigma(p^2)sigma(q^2) = 7^2*13*19*61*p^2*q^2");
  s.prime("T1.C2.30", c2 + ", m = 19^2*61^2", "337");
  s.prime("T1.C2.31", c2 + ", m = 19^2*61^2", "1993");
  s.pair_refutation("T1.C2.32", c2 + ", m = 19^2*61^2", "337*1993", "7^2*13*19*61", "337",
                    "1993");
  s.check("T1.C2.33", c2 + ", m = 19^2*61", "2*7^2*13*22021/(19*61*(22021+1))", "=", "7*19/11^2",
          "11^2*sigma(p^2)sigma(q^2) = 7*19*p^2*q^2, so 11 divides exactly one of p, q");
  s.add("T1.C2.34", StepKind::EquationRefutation, c2 + ", m = 19^2*61",
        {{"mode", "reduced"}, {"coeff", "7*19*11^2/(11^2*sigma(11^2))"}}, "no prime solution",
        "p = 11 reduces the equation to q^2 + q + 1 = q^2");

  // omega(m) = 3, omega(k) = 4
  s.check("T1.C3.1", c3, "abund(3^2*11^2*13^2*17^2)", "<", "2*49/50", "again 7 | k");
  s.check("T1.C3.2", c3 + ", p = 13", "abund(3^2*7^2*13^2)", "=", "19*61/(7^2*13)",
          "q = 2 (mod 3) by Lemma 2, so 19*61 | m");
  s.check("T1.C3.3", c3 + ", p = 13", "19*61", "=", "1159", "m >= 1159");
  s.add("T1.C3.4", StepKind::CandidateEnumeration, c3 + ", p = 13",
        {{"search", "single"}, {"base", "3^2*7^2*13^2"}, {"m_lower", "1159"}}, "{11}",
        "2*1159/1160 <= 19*61*sigma(q^2)/(7^2*13*q^2) < 2");
  s.add("T1.C3.5", StepKind::IntegralityRefutation, c3 + ", p = 13",
        {{"base", "3^2*7^2*13^2"}, {"primes", "{11}"}}, "{11 -> 22021}",
        "near miss: k = 3^2*7^2*11^2*13^2, m = 19^2*61 gives the number of Descartes");
  s.factor("T1.C3.6", c3 + ", p = 13", "22021", "19^2*61");
  s.check("T1.C3.7", c3 + ", p = 13", "omega(22021)", "!=", "3",
          "omega(m) = 2 contradicts omega(m) = 3");
  s.check("T1.C3.8", c3 + ", p = 19", "abund(3^2*7^2*19^2)", "=", "13*127/(7^2*19)",
          "13*127 | m");
  s.check("T1.C3.9", c3 + ", p = 19", "13*127", "=", "1651", "m >= 1651");
  s.add("T1.C3.10", StepKind::CandidateEnumeration, c3 + ", p = 19",
        {{"search", "single"}, {"base", "3^2*7^2*19^2"}, {"m_lower", "1651"}}, "{}",
        "2*1651/1652 <= 13*127*sigma(q^2)/(7^2*19*q^2) < 2 has no prime solution");
  s.add("T1.C3.11", StepKind::MCandidateEnumeration, c3 + ", 13*19 | m",
        {{"required", "{13, 19}"}, {"omega", "3"}},
        "{13*19*t, 13^2*19*t, 13*19^2*t, 13^2*19^2*t}",
        "t >= 5 is a prime or the square of a prime");
  s.check("T1.C3.12", c3 + ", 13*19 | m", "sigma(3^2*7^2)/(2*3^2*7^2)", "=", "247/294",
          "f(p)f(q) = 247/294 * (m+1)/m decreases toward 247/294");
  s.check("T1.C3.13", c3 + ", 13*19 | m", "sigma(3^2*7^2)/(2*3^2*7^2)*(13*19*5+1)/(13*19*5)", "=",
          "206/245", "largest value, at m = 13*19*5");
  s.check("T1.C3.14", c3 + ", 13*19 | m", "f(17)^2", ">", "206/245",
          "so p is one of 5, 7, 11 (13 divides m)");
  s.check("T1.C3.15", c3 + ", p = 5", "f(5)", "<", "247/294",
          "p = 5 is also ruled out by Lemma 10");
  s.check("T1.C3.16", c3 + ", p = 7", "f(43)", "<", "(247/294)/f(7)",
          "redundant: p = 7 would repeat the 7^2 already in k, breaking cube-freeness");
  s.check("T1.C3.17", c3 + ", p = 7", "f(47)", ">", "(206/245)/f(7)",
          "43 and 47 are consecutive primes, so no q fits p = 7");
  s.check("T1.C3.18", c3 + ", p = 11", "f(11)*f(13)", ">=", "247/294",
          "q = 13 would fit the interval; it is excluded because 13 | m in this branch");
  s.check("T1.C3.19", c3 + ", p = 11", "f(11)*f(17)", ">", "206/245",
          "every other q > 11 overshoots");
  s.add("T1.C3.20", StepKind::CandidateEnumeration, c3 + ", 13*19 | m",
        {{"search", "interval"},
         {"lower", "247/294"},
         {"upper", "206/245"},
         {"p_min", "5"},
         {"exclude", "{13, 19}"}},
        "{}");
  return s.done();
}

std::vector<CaseStep> script_for(Target target) {
  switch (target) {
    case Target::Lemma9:
      return lemma9_script();
    case Target::Lemma10:
      return lemma10_script();
    case Target::Theorem1:
      return theorem1_script();
  }
  return {};
}

}  // namespace descartes::replay
