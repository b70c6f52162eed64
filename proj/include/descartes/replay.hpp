#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace descartes::replay {

enum class StepKind {
  InequalityCheck,
  CandidateEnumeration,
  FilterApplication,
  IntegralityRefutation,
  EquationRefutation,
  DivisibilityForcing,
  MCandidateEnumeration,
  AxiomCitation,
};

std::string_view to_string(StepKind kind);
/// Throws std::invalid_argument for an unknown name.
StepKind parse_step_kind(std::string_view name);

struct Field {
  std::string name;
  std::string value;

  friend bool operator==(const Field&, const Field&) = default;
};

/// One proof claim, re-executable from its inputs alone.
///
/// Inputs are strings: decimal integers, fractions "n/d", exact expressions
/// (see expression.hpp), factorization literals "p^e*...", or lists such as
/// "{37, 43}" and "{(17, 59), (17, 61)}". expected and computed use the same
/// canonical text, so a step passes iff they are equal.
struct CaseStep {
  std::string id;
  StepKind kind = StepKind::AxiomCitation;
  std::string anchor;
  std::vector<Field> inputs;
  std::string expected;
  std::string note;

  const std::string* find_input(std::string_view name) const;

  friend bool operator==(const CaseStep&, const CaseStep&) = default;
};

struct StepResult {
  std::string computed;
  std::string detail;
  bool pass = false;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

/// Missing or unparseable step input; what() starts with the step id.
class MalformedStep : public std::invalid_argument {
 public:
  MalformedStep(const std::string& step_id, const std::string& what);
  const std::string& step_id() const { return step_id_; }

 private:
  std::string step_id_;
};

/// Executes one step. Axiom citations are not recomputed and pass vacuously;
/// one whose expected value is not "cited" is malformed.
/// Throws MalformedStep on bad inputs.
StepResult run_step(const CaseStep& step);

enum class Target { Lemma9, Lemma10, Theorem1 };

std::string_view to_string(Target target);  // "lemma9", "lemma10", "theorem1"
std::optional<Target> parse_target(std::string_view name);
/// First line of the text transcript, e.g. "LEMMA 10: 5 does not divide k".
std::string_view headline(Target target);

struct RecordedStep {
  CaseStep step;
  StepResult result;

  friend bool operator==(const RecordedStep&, const RecordedStep&) = default;
};

struct Transcript {
  Target target = Target::Lemma9;
  std::vector<RecordedStep> steps;
  bool established = false;
  std::optional<std::string> failed_at;  // id of the first failing step
  unsigned axiom_count = 0;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Case scripts: one CaseStep per claim of the corresponding proof.
std::vector<CaseStep> lemma9_script();
std::vector<CaseStep> lemma10_script();
std::vector<CaseStep> theorem1_script();
std::vector<CaseStep> script_for(Target target);

/// Runs every step in order. A malformed step is recorded as a failure.
Transcript replay(Target target, const std::vector<CaseStep>& script);

Transcript replay_lemma9();
Transcript replay_lemma10();
Transcript replay_theorem1();

/// Headline, one tab-separated line per step (id, kind, anchor, outcome,
/// expected, computed, inputs, note), then the verdict line.
std::string emit_text(const Transcript& t);

/// JSON document: {target, verdict, failed_at, axiom_count, steps: [{step_id,
/// kind, paper_anchor, inputs, expected, computed, detail, note, pass}]}.
/// All numbers are carried inside strings.
std::string emit_structured(const Transcript& t);

/// Inverse of emit_structured. Throws std::invalid_argument on schema errors.
Transcript parse_structured(std::string_view document);

}  // namespace descartes::replay
