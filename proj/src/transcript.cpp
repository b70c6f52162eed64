#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "descartes/replay.hpp"

namespace descartes::replay {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Target, std::string_view>, 3> kTargetNames = {{
    {Target::Lemma9, "lemma9"},
    {Target::Lemma10, "lemma10"},
    {Target::Theorem1, "theorem1"},
}};

std::string outcome(const RecordedStep& s) {
  if (s.step.kind == StepKind::AxiomCitation) return "AXIOM";
  return s.result.pass ? "PASS" : "FAIL";
}

std::string inputs_text(const std::vector<Field>& inputs) {
  std::string out;
  for (const Field& f : inputs) {
    if (!out.empty()) out += ' ';
    out += f.name + "=\"" + f.value + '"';
  }
  return out;
}

const Json& member(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw std::invalid_argument(std::string("transcript: missing field '") + name + "'");
  }
  return obj.at(name);
}

std::string string_member(const Json& obj, const char* name) {
  const Json& v = member(obj, name);
  if (!v.is_string()) {
    throw std::invalid_argument(std::string("transcript: field '") + name + "' is not a string");
  }
  return v.get<std::string>();
}

bool bool_member(const Json& obj, const char* name) {
  const Json& v = member(obj, name);
  if (!v.is_boolean()) {
    throw std::invalid_argument(std::string("transcript: field '") + name + "' is not a boolean");
  }
  return v.get<bool>();
}

}  // namespace

std::string_view to_string(Target target) {
  for (const auto& [t, name] : kTargetNames) {
    if (t == target) return name;
  }
  return "unknown";
}

std::optional<Target> parse_target(std::string_view name) {
  for (const auto& [t, n] : kTargetNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string_view headline(Target target) {
  switch (target) {
    case Target::Lemma9:
      return "LEMMA 9: m >= 49";
    case Target::Lemma10:
      return "LEMMA 10: 5 does not divide k";
    case Target::Theorem1:
      return "THEOREM 1: no cube-free Descartes number has seven distinct prime factors";
  }
  return "";
}

Transcript replay(Target target, const std::vector<CaseStep>& script) {
  Transcript t;
  t.target = target;
  t.steps.reserve(script.size());
  for (const CaseStep& step : script) {
    RecordedStep rec{step, {}};
    try {
      rec.result = run_step(step);
    } catch (const std::exception& e) {
      rec.result = {"", std::string("malformed: ") + e.what(), false};
    }
    if (step.kind == StepKind::AxiomCitation) ++t.axiom_count;
    if (!rec.result.pass && !t.failed_at) t.failed_at = step.id;
    t.steps.push_back(std::move(rec));
  }
  t.established = !t.failed_at.has_value();
  return t;
}

Transcript replay_lemma9() { return replay(Target::Lemma9, lemma9_script()); }
Transcript replay_lemma10() { return replay(Target::Lemma10, lemma10_script()); }
Transcript replay_theorem1() { return replay(Target::Theorem1, theorem1_script()); }

std::string emit_text(const Transcript& t) {
  std::ostringstream out;
  out << headline(t.target) << '\n';
  for (const RecordedStep& s : t.steps) {
    out << s.step.id << '\t' << to_string(s.step.kind) << '\t' << s.step.anchor << '\t'
        << outcome(s);
    if (s.step.kind == StepKind::AxiomCitation) {
      out << '\t' << s.result.detail;
    } else {
      out << "\texpected " << s.step.expected << "\tcomputed " << s.result.computed
          << "\tinputs " << inputs_text(s.step.inputs);
    }
    if (!s.step.note.empty()) out << "\tnote: " << s.step.note;
    out << '\n';
  }
  out << "VERDICT: ";
  if (t.established) {
    out << "established";
  } else {
    out << "failed at " << *t.failed_at;
  }
  out << " (steps " << t.steps.size() << ", axioms " << t.axiom_count << ")\n";
  return out.str();
}

std::string emit_structured(const Transcript& t) {
  Json doc;
  doc["target"] = std::string(to_string(t.target));
  doc["verdict"] = t.established ? "established" : "failed";
  doc["failed_at"] = t.failed_at ? Json(*t.failed_at) : Json(nullptr);
  doc["axiom_count"] = std::to_string(t.axiom_count);
  Json steps = Json::array();
  for (const RecordedStep& s : t.steps) {
    Json inputs = Json::object();
    for (const Field& f : s.step.inputs) inputs[f.name] = f.value;
    Json j;
    j["step_id"] = s.step.id;
    j["kind"] = std::string(to_string(s.step.kind));
    j["paper_anchor"] = s.step.anchor;
    j["inputs"] = std::move(inputs);
    j["expected"] = s.step.expected;
    j["computed"] = s.result.computed;
    j["detail"] = s.result.detail;
    j["note"] = s.step.note;
    j["pass"] = s.result.pass;
    steps.push_back(std::move(j));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

Transcript parse_structured(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("transcript: ") + e.what());
  }
  Transcript t;
  const std::string target = string_member(doc, "target");
  const auto parsed = parse_target(target);
  if (!parsed) throw std::invalid_argument("transcript: unknown target '" + target + "'");
  t.target = *parsed;

  const std::string verdict = string_member(doc, "verdict");
  if (verdict != "established" && verdict != "failed") {
    throw std::invalid_argument("transcript: unknown verdict '" + verdict + "'");
  }
  t.established = verdict == "established";

  const Json& failed_at = member(doc, "failed_at");
  if (failed_at.is_string()) {
    t.failed_at = failed_at.get<std::string>();
  } else if (!failed_at.is_null()) {
    throw std::invalid_argument("transcript: field 'failed_at' must be a string or null");
  }
  if (t.established == t.failed_at.has_value()) {
    throw std::invalid_argument("transcript: verdict and failed_at disagree");
  }

  const std::string axioms = string_member(doc, "axiom_count");
  if (axioms.empty() || !std::all_of(axioms.begin(), axioms.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("transcript: axiom_count is not a decimal string");
  }
  t.axiom_count = static_cast<unsigned>(std::stoul(axioms));

  const Json& steps = member(doc, "steps");
  if (!steps.is_array()) throw std::invalid_argument("transcript: 'steps' is not an array");
  for (const Json& j : steps) {
    RecordedStep s;
    s.step.id = string_member(j, "step_id");
    s.step.kind = parse_step_kind(string_member(j, "kind"));
    s.step.anchor = string_member(j, "paper_anchor");
    const Json& inputs = member(j, "inputs");
    if (!inputs.is_object()) throw std::invalid_argument("transcript: 'inputs' is not an object");
    for (const auto& [name, value] : inputs.items()) {
      if (!value.is_string()) {
        throw std::invalid_argument("transcript: input '" + name + "' is not a string");
      }
      s.step.inputs.push_back({name, value.get<std::string>()});
    }
    s.step.expected = string_member(j, "expected");
    s.result.computed = string_member(j, "computed");
    s.result.detail = string_member(j, "detail");
    s.step.note = string_member(j, "note");
    s.result.pass = bool_member(j, "pass");
    t.steps.push_back(std::move(s));
  }
  return t;
}

}  // namespace descartes::replay
