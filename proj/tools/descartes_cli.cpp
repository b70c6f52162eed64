// descartes: command-line front end.
//
// Exit codes: 0 success or established, 1 negative result (not a pair, no m,
// a failed replay), 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "descartes/descartes.hpp"
#include "descartes/lemmas.hpp"
#include "descartes/m_candidates.hpp"
#include "descartes/oracle.hpp"
#include "descartes/replay.hpp"
#include "descartes/search.hpp"

namespace {

using namespace descartes;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Output {
  std::string format = "text";
  std::string out_path;

  bool structured() const { return format == "structured"; }
};

int deliver(const Output& o, const std::string& body) {
  if (o.out_path.empty()) {
    std::cout << body;
    return kOk;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  f << body;
  if (!f) {
    std::cerr << "error: cannot write " << o.out_path << "\n";
    return kUsage;
  }
  return kOk;
}

int finish(const Output& o, const std::string& body, int code) {
  const int io = deliver(o, body);
  return io != kOk ? io : code;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Integer> parse_primes(const std::vector<std::string>& items) {
  std::vector<Integer> out;
  for (const std::string& s : items) out.push_back(parse_integer(s));
  return out;
}

std::uint64_t segment_size_default() {
  const char* env = std::getenv("DESCARTES_SEGMENT_SIZE");
  if (env == nullptr || *env == '\0') return OracleOptions{}.segment_size;
  const Integer v = parse_integer(env);
  if (v < 1) throw std::invalid_argument("DESCARTES_SEGMENT_SIZE must be positive");
  return to_u64(v);
}

// verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string k;
  std::string m;
};

int cmd_verify(const VerifyArgs& a, const Output& o) {
  const Factorization k = Factorization::parse(a.k);
  const Factorization m = Factorization::parse(a.m);
  const Integer kv = k.value();
  const Integer mv = m.value();
  const Integer sk = sigma(k);
  const Integer lhs = sk * (mv + 1);
  const Integer rhs = 2 * kv * mv;
  const bool pair = is_descartes_pair(k, m);

  std::vector<std::pair<std::string, std::string>> verdicts;
  verdicts.emplace_back("lemma2", to_string(lemma2_filter(k)));
  {
    // Lemma 4 speaks about s with k = s^2.
    std::vector<PrimePower> s;
    bool square = true;
    for (const PrimePower& pp : k.powers()) {
      if (pp.exponent != 2) square = false;
      s.push_back({pp.prime, 1});
    }
    verdicts.emplace_back("lemma4", square ? to_string(lemma4_check(Factorization::from_powers(s)))
                                           : "not applicable: k is not the square of a squarefree s");
  }
  verdicts.emplace_back("lemma5", to_string(lemma5_check(k, m)));
  verdicts.emplace_back("lemma6", to_string(lemma6_check(k, m)));
  verdicts.emplace_back("lemma9", to_string(lemma9_admissible(mv)));
  verdicts.emplace_back("cube_free", is_cube_free(k * m) ? "holds" : "fails");

  const std::string verdict = pair ? "DESCARTES PAIR" : "NOT A DESCARTES PAIR";
  std::ostringstream out;
  if (o.structured()) {
    Json j;
    j["k"] = to_string(kv);
    j["k_factored"] = k.to_string();
    j["m"] = to_string(mv);
    j["m_factored"] = m.to_string();
    j["sigma_k"] = to_string(sk);
    j["lhs"] = to_string(lhs);
    j["rhs"] = to_string(rhs);
    Json lemmas = Json::object();
    for (const auto& [name, v] : verdicts) lemmas[name] = v;
    j["lemmas"] = std::move(lemmas);
    j["descartes_pair"] = pair;
    out << json_text(j);
  } else {
    out << "k = " << k.to_string() << " = " << to_string(kv) << "\n";
    out << "m = " << m.to_string() << " = " << to_string(mv) << "\n";
    out << "sigma(k)(m+1) = " << to_string(sk) << "*" << to_string(mv + 1) << " = "
        << to_string(lhs) << "\n";
    out << "2km = " << to_string(rhs) << "\n";
    for (const auto& [name, v] : verdicts) out << name << ": " << v << "\n";
    out << verdict << "\n";
  }
  return finish(o, out.str(), pair ? kOk : kNegative);
}

// solve-m --------------------------------------------------------------

int cmd_solve_m(const std::string& k_text, const Output& o) {
  const Factorization k = Factorization::parse(k_text);
  const auto m = solve_m(k);
  std::ostringstream out;
  if (o.structured()) {
    Json j;
    j["k"] = to_string(k.value());
    j["m"] = m ? Json(to_string(*m)) : Json(nullptr);
    out << json_text(j);
  } else {
    out << (m ? to_string(*m) : std::string("none")) << "\n";
  }
  return finish(o, out.str(), m ? kOk : kNegative);
}

// pairs ----------------------------------------------------------------

struct PairsArgs {
  std::string base;
  std::string m_min = "49";
  std::optional<unsigned> residue;
  std::vector<std::string> exclude;
  bool apply_filters = false;
  bool single = false;
};

bool passes_filters(const Factorization& k) { return is_cube_free(k) && lemma2_filter(k).holds; }

Factorization square_of(std::uint64_t p) { return Factorization::from_powers({{Integer(p), 2}}); }

int cmd_pairs(const PairsArgs& a, const Output& o) {
  SearchConstraint c;
  c.base = Factorization::parse(a.base);
  c.m_lower = parse_integer(a.m_min);
  c.residue_mod3 = a.residue;
  c.excluded_primes = parse_primes(a.exclude);

  std::ostringstream out;
  if (a.single) {
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q : single_prime_search(c)) {
      if (!a.apply_filters || passes_filters(c.base * square_of(q))) qs.push_back(q);
    }
    if (o.structured()) {
      Json j;
      j["base"] = c.base.to_string();
      j["m_min"] = to_string(c.m_lower);
      Json list = Json::array();
      for (auto q : qs) list.push_back(std::to_string(q));
      j["primes"] = std::move(list);
      out << json_text(j);
    } else {
      for (auto q : qs) out << q << "\n";
    }
    return finish(o, out.str(), kOk);
  }

  std::vector<PrimePair> pairs;
  for (const PrimePair& pr : pair_search(c)) {
    if (!a.apply_filters || passes_filters(c.base * square_of(pr.p) * square_of(pr.q))) {
      pairs.push_back(pr);
    }
  }
  if (o.structured()) {
    Json j;
    j["base"] = c.base.to_string();
    j["m_min"] = to_string(c.m_lower);
    Json list = Json::array();
    for (const auto& pr : pairs) list.push_back({std::to_string(pr.p), std::to_string(pr.q)});
    j["pairs"] = std::move(list);
    out << json_text(j);
  } else {
    for (const auto& pr : pairs) out << pr.p << " " << pr.q << "\n";
  }
  return finish(o, out.str(), kOk);
}

// m-candidates -----------------------------------------------------------

struct MArgs {
  std::vector<std::string> require;
  unsigned omega = 1;
  unsigned residue = 1;
  bool lemma9 = false;
};

int cmd_m_candidates(const MArgs& a, const Output& o) {
  const std::vector<Integer> required = parse_primes(a.require);
  std::vector<std::string> lines;
  if (a.omega > required.size()) {
    for (const MShape& s : enumerate_m_shapes(required, a.omega)) lines.push_back(s.to_string());
  } else {
    for (const Integer& m : enumerate_m_candidates(required, a.omega, a.residue)) {
      if (!a.lemma9 || lemma9_admissible(m).holds) lines.push_back(to_string(m));
    }
  }
  std::ostringstream out;
  if (o.structured()) {
    Json j;
    j["omega"] = std::to_string(a.omega);
    j["candidates"] = lines;
    out << json_text(j);
  } else {
    for (const auto& l : lines) out << l << "\n";
  }
  return finish(o, out.str(), kOk);
}

// oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string k_limit;
  std::optional<std::string> segment_size;
  unsigned workers = 1;
  bool progress = false;
};

int cmd_oracle(const OracleArgs& a, const Output& o) {
  const Integer limit = parse_integer(a.k_limit);
  if (limit < 1) throw std::invalid_argument("--k-limit must be at least 1");
  OracleOptions opts;
  opts.segment_size = a.segment_size ? to_u64(parse_integer(*a.segment_size)) : segment_size_default();
  opts.workers = a.workers;
  if (a.progress) {
    opts.on_segment = [](std::uint64_t done, std::uint64_t total) {
      std::cerr << "segment " << done << "/" << total << "\n";
    };
  }
  const auto start = std::chrono::steady_clock::now();
  const auto hits = brute_force_oracle(to_u64(limit), opts);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream out;
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", secs);
  if (o.structured()) {
    Json j;
    j["k_limit"] = to_string(limit);
    Json list = Json::array();
    for (const auto& h : hits) {
      list.push_back({{"k", to_string(h.k().value())},
                      {"m", to_string(h.m().value())},
                      {"n", to_string(h.n())}});
    }
    j["hits"] = std::move(list);
    j["count"] = std::to_string(hits.size());
    j["elapsed_seconds"] = elapsed;
    out << json_text(j);
  } else {
    for (const auto& h : hits) {
      out << to_string(h.k().value()) << " " << to_string(h.m().value()) << " "
          << to_string(h.n()) << "\n";
    }
    out << "summary: " << hits.size() << " hits for odd k <= " << to_string(limit) << ", elapsed "
        << elapsed << " s\n";
  }
  return finish(o, out.str(), kOk);
}

// prove ----------------------------------------------------------------

int cmd_prove(const std::string& target, const Output& o) {
  std::vector<replay::Target> targets;
  if (target == "all") {
    targets = {replay::Target::Lemma9, replay::Target::Lemma10, replay::Target::Theorem1};
  } else {
    targets = {*replay::parse_target(target)};
  }
  bool all_established = true;
  std::ostringstream out;
  Json docs = Json::array();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const replay::Transcript t = replay::replay(targets[i], replay::script_for(targets[i]));
    all_established = all_established && t.established;
    if (o.structured()) {
      if (targets.size() == 1) {
        out << replay::emit_structured(t);
      } else {
        docs.push_back(Json::parse(replay::emit_structured(t)));
      }
    } else {
      if (i > 0) out << "\n";
      out << replay::emit_text(t);
    }
  }
  if (o.structured() && targets.size() > 1) out << json_text(docs);
  return finish(o, out.str(), all_established ? kOk : kNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descartes number verification, search and proof replay"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  app.add_option("--format", output.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--out", output.out_path, "Write output to this file instead of stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check sigma(k)(m+1) = 2km and the lemma filters");
  verify_cmd->add_option("k", verify.k, "k as a decimal or p^e*p^e literal")->required();
  verify_cmd->add_option("m", verify.m, "m as a decimal or p^e*p^e literal")->required();

  std::string solve_k;
  auto* solve_cmd = app.add_subcommand("solve-m", "Solve sigma(k)(m+1) = 2km for m");
  solve_cmd->add_option("k", solve_k, "k as a decimal or p^e*p^e literal")->required();

  PairsArgs pairs;
  auto* pairs_cmd = app.add_subcommand("pairs", "Enumerate primes p < q with k = base p^2 q^2");
  pairs_cmd->add_option("--base", pairs.base, "Fixed part of k")->required();
  pairs_cmd->add_option("--m-min", pairs.m_min, "Lower bound on m")->capture_default_str();
  pairs_cmd->add_option("--residue", pairs.residue, "Required residue mod 3 of the free primes")
      ->check(CLI::Range(0, 2));
  pairs_cmd->add_option("--exclude", pairs.exclude, "Primes to skip")->delimiter(',');
  pairs_cmd->add_flag("--apply-filters", pairs.apply_filters, "Keep only Lemma 2 and cube-free survivors");
  pairs_cmd->add_flag("--single", pairs.single, "Search a single free prime q instead of a pair");

  MArgs mc;
  auto* m_cmd = app.add_subcommand("m-candidates", "Enumerate m built from required primes");
  m_cmd->add_option("--require", mc.require, "Primes that divide m")->delimiter(',')->required();
  m_cmd->add_option("--omega", mc.omega, "Number of distinct primes of m")->required();
  m_cmd->add_option("--residue", mc.residue, "Residue of m mod 12")
      ->check(CLI::Range(0, 11))
      ->capture_default_str();
  m_cmd->add_flag("--lemma9", mc.lemma9, "Drop values that fail Lemma 9");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Sieve every odd k up to a limit");
  oracle_cmd->add_option("--k-limit", oracle.k_limit, "Largest k")->required();
  oracle_cmd->add_option("--segment-size", oracle.segment_size,
                         "Sieve segment length (default: DESCARTES_SEGMENT_SIZE or 1048576)");
  oracle_cmd->add_option("--workers", oracle.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_cmd->add_flag("--progress", oracle.progress, "Report finished segments on stderr");

  std::string target;
  auto* prove_cmd = app.add_subcommand("prove", "Replay a proof as a transcript");
  prove_cmd->add_option("target", target, "lemma9, lemma10, theorem1 or all")
      ->required()
      ->check(CLI::IsMember({"lemma9", "lemma10", "theorem1", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, output);
    if (*solve_cmd) return cmd_solve_m(solve_k, output);
    if (*pairs_cmd) return cmd_pairs(pairs, output);
    if (*m_cmd) return cmd_m_candidates(mc, output);
    if (*oracle_cmd) return cmd_oracle(oracle, output);
    if (*prove_cmd) return cmd_prove(target, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
