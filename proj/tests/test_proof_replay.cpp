#include <doctest.h>

#include <json.hpp>

#include "descartes/replay.hpp"
#include "naive_search.hpp"

using namespace descartes;
using namespace descartes::replay;

namespace {

const std::vector<Target> kTargets = {Target::Lemma9, Target::Lemma10, Target::Theorem1};

std::size_t count_kind(const std::vector<CaseStep>& script, StepKind kind) {
  return static_cast<std::size_t>(std::count_if(
      script.begin(), script.end(), [&](const CaseStep& s) { return s.kind == kind; }));
}

const RecordedStep& step(const Transcript& t, const std::string& id) {
  for (const auto& s : t.steps) {
    if (s.step.id == id) return s;
  }
  FAIL("no step " << id);
  throw std::logic_error("unreachable");
}

// Parses the integers out of "{(17, 59), (17, 61)}" or "{37, 43}".
std::vector<std::uint64_t> numbers(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::uint64_t cur = 0;
  bool in = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
      in = true;
    } else if (in) {
      out.push_back(cur);
      cur = 0;
      in = false;
    }
  }
  if (in) out.push_back(cur);
  return out;
}

std::vector<std::uint64_t> flatten(const std::vector<PrimePair>& pairs) {
  std::vector<std::uint64_t> out;
  for (const auto& p : pairs) {
    out.push_back(p.p);
    out.push_back(p.q);
  }
  return out;
}

}  // namespace

TEST_CASE("every transcript is established") {
  for (Target t : kTargets) {
    const Transcript tr = replay::replay(t, script_for(t));
    INFO(to_string(t));
    CHECK(tr.established);
    CHECK_FALSE(tr.failed_at.has_value());
    for (const auto& s : tr.steps) {
      INFO(s.step.id << ": expected " << s.step.expected << ", computed " << s.result.computed);
      CHECK(s.result.pass);
    }
  }
}

TEST_CASE("axiom counts are pinned") {
  CHECK(replay_lemma9().axiom_count == 3);
  CHECK(replay_lemma10().axiom_count == 8);
  CHECK(replay_theorem1().axiom_count == 6);
  CHECK(count_kind(lemma9_script(), StepKind::AxiomCitation) == 3);
  CHECK(count_kind(lemma10_script(), StepKind::AxiomCitation) == 8);
  CHECK(count_kind(theorem1_script(), StepKind::AxiomCitation) == 6);
}

TEST_CASE("step counts and ids") {
  CHECK(lemma9_script().size() == 14);
  CHECK(lemma10_script().size() == 29);
  CHECK(theorem1_script().size() >= 25);
  for (Target t : kTargets) {
    const auto script = script_for(t);
    std::set<std::string> ids;
    for (const auto& s : script) {
      CHECK(ids.insert(s.id).second);
      CHECK_FALSE(s.anchor.empty());
      CHECK_FALSE(s.expected.empty());
      if (s.kind == StepKind::AxiomCitation) {
        CHECK(s.find_input("source") != nullptr);
        CHECK(s.find_input("statement") != nullptr);
      }
    }
  }
}

TEST_CASE("Lemma 9 transcript") {
  const Transcript t = replay_lemma9();
  CHECK(step(t, "L9.4").result.computed == "{1, 13, 25, 37}");
  CHECK(step(t, "L9.12").result.computed == "fails: m_is_25 {25}");
  CHECK(step(t, "L9.14").result.computed == "holds");
  CHECK(count_kind(lemma9_script(), StepKind::AxiomCitation) >= 2);
}

TEST_CASE("Lemma 10 transcript") {
  const Transcript t = replay_lemma10();
  CHECK(step(t, "L10.C2.3").result.computed == "949 (mod 3900)");
  CHECK(step(t, "L10.C2.7").result.computed == "2449 (mod 9300)");
  CHECK(step(t, "L10.C2.4").result.computed == "{(17, 59), (17, 61), (19, 43), (23, 31)}");
  CHECK(step(t, "L10.C2.8").result.computed ==
        "{(37, 307), (37, 311), (37, 313), (37, 317), (37, 331), (37, 337), (41, 167), "
        "(41, 173), (47, 109), (47, 113), (53, 89), (61, 71), (61, 73)}");
  CHECK(step(t, "L10.C2.5").result.computed == "{(17, 61)}");
  CHECK(step(t, "L10.C2.9").result.computed == "{(37, 311), (37, 317), (47, 109), (61, 71)}");
  CHECK(step(t, "L10.C3.3").result.computed == "{37, 43, 61, 67, 73, 79}");
  CHECK(step(t, "L10.C3.6").result.computed == "{}");
  CHECK(step(t, "L10.C3.8").step.find_input("rhs")->compare("403/450") == 0);
  CHECK(step(t, "L10.C3.9").step.find_input("rhs")->compare("2822/3150") == 0);
  CHECK(step(t, "L10.C3.10").step.find_input("lhs")->compare("f(7)") == 0);
  CHECK(step(t, "L10.C3.11").step.find_input("lhs")->compare("f(19)^2") == 0);
  CHECK(step(t, "L10.C3.12").result.computed == "{}");
  CHECK(emit_text(t).find("Lemma 10 Case 2") != std::string::npos);
}

TEST_CASE("Theorem 1 transcript") {
  const Transcript t = replay_theorem1();
  CHECK(step(t, "T1.C2.1").result.computed == "true");
  CHECK(step(t, "T1.C2.11").result.computed == "unequal");
  CHECK(step(t, "T1.C2.34").result.computed == "no prime solution");
  const auto& near = step(t, "T1.C3.5");
  CHECK(near.result.computed == "{11 -> 22021}");
  CHECK(near.step.note.find("number of Descartes") != std::string::npos);
  CHECK(step(t, "T1.C3.6").result.computed == "19^2*61");
  CHECK(step(t, "T1.C3.20").result.computed == "{}");
  CHECK(step(t, "T1.C1.10").result.computed == "fails: residue_1_prime_count {7, 13, 181}");
  CHECK(step(t, "T1.C1.12").step.note.find("at most two") != std::string::npos);
}

TEST_CASE("mutating any expected value flips the verdict") {
  for (Target target : kTargets) {
    const auto script = script_for(target);
    for (std::size_t i = 0; i < script.size(); ++i) {
      auto mutated = script;
      mutated[i].expected += "x";
      const Transcript t = replay::replay(target, mutated);
      INFO(script[i].id);
      CHECK_FALSE(t.established);
      REQUIRE(t.failed_at.has_value());
      CHECK(*t.failed_at == script[i].id);
    }
  }
}

TEST_CASE("targeted tamper: the m = 25 exclusion") {
  auto script = lemma9_script();
  for (auto& s : script) {
    if (s.id == "L9.12") s.expected = "holds";
  }
  const Transcript t = replay::replay(Target::Lemma9, script);
  CHECK_FALSE(t.established);
  CHECK(*t.failed_at == "L9.12");
  CHECK(emit_text(t).find("VERDICT: failed at L9.12") != std::string::npos);
}

TEST_CASE("malformed steps are rejected with their id") {
  CaseStep bad{"X.1", StepKind::InequalityCheck, "test", {{"lhs", "1"}, {"rel", "<"}}, "true", ""};
  try {
    run_step(bad);
    FAIL("expected MalformedStep");
  } catch (const MalformedStep& e) {
    CHECK(e.step_id() == "X.1");
    CHECK(std::string(e.what()).rfind("X.1", 0) == 0);
  }
  bad.inputs.push_back({"rhs", "sigma(0)"});
  CHECK_THROWS_AS(run_step(bad), MalformedStep);
  CaseStep unknown{"X.2", StepKind::CandidateEnumeration, "test", {{"search", "nope"}}, "{}", ""};
  CHECK_THROWS_AS(run_step(unknown), MalformedStep);
  const Transcript t = replay::replay(Target::Lemma9, {unknown});
  CHECK_FALSE(t.established);
  CHECK(t.steps[0].result.detail.rfind("malformed", 0) == 0);
}

TEST_CASE("replay is deterministic") {
  for (Target t : kTargets) {
    CHECK(emit_structured(replay::replay(t, script_for(t))) == emit_structured(replay::replay(t, script_for(t))));
    CHECK(emit_text(replay::replay(t, script_for(t))) == emit_text(replay::replay(t, script_for(t))));
  }
}

TEST_CASE("structured transcripts round-trip") {
  for (Target t : kTargets) {
    const Transcript tr = replay::replay(t, script_for(t));
    const std::string doc = emit_structured(tr);
    CHECK(parse_structured(doc) == tr);
    const auto j = nlohmann::json::parse(doc);
    CHECK(j.at("target") == std::string(to_string(t)));
    CHECK(j.at("verdict") == "established");
    CHECK(j.at("axiom_count").is_string());
    for (const auto& s : j.at("steps")) {
      for (const char* key :
           {"step_id", "kind", "paper_anchor", "inputs", "expected", "computed", "pass"}) {
        CHECK(s.contains(key));
      }
      for (const auto& [k, v] : s.at("inputs").items()) CHECK(v.is_string());
    }
  }
  const Transcript failed = replay::replay(Target::Lemma9, {CaseStep{"X", StepKind::InequalityCheck, "a",
                                                             {{"lhs", "1"}, {"rel", "<"}, {"rhs", "2"}},
                                                             "false", ""}});
  CHECK(parse_structured(emit_structured(failed)) == failed);
  CHECK_THROWS_AS(parse_structured("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_structured("{\"target\": \"lemma11\"}"), std::invalid_argument);
}

TEST_CASE("serialized steps re-verify from their inputs alone") {
  for (Target t : kTargets) {
    const Transcript parsed = parse_structured(emit_structured(replay::replay(t, script_for(t))));
    for (const auto& s : parsed.steps) {
      const StepResult again = run_step(s.step);
      INFO(s.step.id);
      CHECK(again.computed == s.result.computed);
      CHECK(again.pass == s.result.pass);
    }
  }
}

TEST_CASE("text transcripts") {
  const std::string text = emit_text(replay_lemma10());
  CHECK(text.rfind("LEMMA 10: 5 does not divide k\n", 0) == 0);
  CHECK(text.find("VERDICT: established (steps 29, axioms 8)") != std::string::npos);
  CHECK(emit_text(replay_lemma9()).rfind("LEMMA 9: m >= 49\n", 0) == 0);
  CHECK(emit_text(replay_theorem1()).rfind("THEOREM 1:", 0) == 0);
  // headline + one line per step + verdict
  const auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 29 + 2);
}

TEST_CASE("every CandidateEnumeration expectation agrees with the naive oracle") {
  std::size_t checked = 0;
  for (Target t : kTargets) {
    for (const CaseStep& s : script_for(t)) {
      if (s.kind != StepKind::CandidateEnumeration) continue;
      const std::string search = *s.find_input("search");
      const auto residue = [&]() -> std::optional<unsigned> {
        const std::string* r = s.find_input("residue_mod3");
        if (r == nullptr) return std::nullopt;
        return static_cast<unsigned>(std::stoul(*r));
      }();
      std::vector<Integer> excluded;
      if (const std::string* e = s.find_input("exclude")) {
        for (auto v : numbers(*e)) excluded.emplace_back(v);
      }
      INFO(s.id);
      if (search == "pairs" || search == "single") {
        SearchConstraint c;
        c.base = Factorization::parse(*s.find_input("base"));
        c.m_lower = parse_integer(*s.find_input("m_lower"));
        c.residue_mod3 = residue;
        c.excluded_primes = excluded;
        if (search == "pairs") {
          CHECK(numbers(s.expected) == flatten(naive::pairs(c)));
        } else {
          CHECK(numbers(s.expected) == naive::singles(c));
        }
        ++checked;
      } else if (search == "interval") {
        const IntervalConstraint c{parse_rational(*s.find_input("lower")),
                                   parse_rational(*s.find_input("upper")),
                                   std::stoull(*s.find_input("p_min")), residue, excluded};
        CHECK(numbers(s.expected) == flatten(naive::interval(c)));
        ++checked;
      } else if (search == "residue_class") {
        const auto mod = std::stoull(*s.find_input("modulus"));
        const auto res = std::stoull(*s.find_input("residue"));
        const auto below = std::stoull(*s.find_input("below"));
        std::vector<std::uint64_t> direct;
        for (std::uint64_t n = 1; n < below; ++n) {
          if (n % mod == res) direct.push_back(n);
        }
        CHECK(numbers(s.expected) == direct);
        ++checked;
      }
    }
  }
  CHECK(checked == 9);
}
