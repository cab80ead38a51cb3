#ifndef SUBTREE_CLI_HPP
#define SUBTREE_CLI_HPP

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/subtree.cpp only forwards argv.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 invalid input, 4 theorem
// violation, 5 input over the oracle size limit.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subtree/canonical.hpp"
#include "subtree/count.hpp"
#include "subtree/extremal.hpp"
#include "subtree/formulas.hpp"
#include "subtree/io.hpp"
#include "subtree/majorization.hpp"
#include "subtree/oracle.hpp"
#include "subtree/tree.hpp"

namespace subtree::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kParse = 2, kInvalid = 3, kViolation = 4, kTooLarge = 5 };

/// Raised when an exhaustive check finds a counterexample.
class Violation : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json = false;
  bool timing = false;
  std::string file;
  std::string pi;
  std::size_t all_n = 0;
  std::size_t jobs = 1;
  std::string a, b;
  std::string type;
  std::size_t n = 0, k = 0;
};

inline Json edges_json(const Tree& t) {
  Json out = Json::array();
  for (auto [u, v] : t.sorted_edges()) out.push_back({u, v});
  return out;
}

inline Json counts_json(const std::vector<BigCount>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

/// Enumeration cap for verify; SUBTREE_ORACLE_LIMIT overrides it.
inline std::size_t oracle_limit() {
  const char* env = std::getenv("SUBTREE_ORACLE_LIMIT");
  if (env == nullptr) return kEnumerationLimit;
  return detail::parse_number(env, "SUBTREE_ORACLE_LIMIT");
}

inline DegreeSequence read_sequence(const std::string& text) {
  const auto raw = parse_degree_list(text);
  return validate_degree_sequence(std::span<const long long>(raw));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- commands --------------------------------------------------------------

inline Json cmd_count(const Options& o, std::ostream& text) {
  const Tree t = parse_edge_list(read_file(o.file));
  const FVector f = f_vector(t);
  const BigCount phi = count_subtrees(t);
  text << "vertices: " << t.size() << "\nphi: " << phi << "\n";
  text << "vertex f\n";
  for (Vertex v = 0; v < t.size(); ++v) text << v << " " << f.values[v] << "\n";
  text << "argmax:";
  for (Vertex v : f.argmax) text << " " << v;
  text << "\n";
  return Json{{"inputs", {{"file", o.file}}},
              {"outputs",
               {{"n", t.size()}, {"phi", to_decimal(phi)}, {"f", counts_json(f.values)}, {"argmax", f.argmax}}}};
}

inline Json cmd_build(const Options& o, std::ostream& text) {
  const DegreeSequence pi = read_sequence(o.pi);
  const GreedyTree g = build_greedy_bfs(pi);
  const BigCount phi = count_subtrees(g.tree);
  text << "pi: " << format_sequence(pi) << "\n";
  text << "layer sizes: " << format_sequence(g.labeling.layer_sizes) << "\n";
  text << "phi: " << phi << "\n";
  text << "edges:\n" << format_edge_list(g.tree);
  return Json{{"inputs", {{"pi", pi.values()}}},
              {"outputs",
               {{"n", pi.size()},
                {"layer_sizes", g.labeling.layer_sizes},
                {"phi", to_decimal(phi)},
                {"edges", edges_json(g.tree)}}}};
}

struct SequenceVerdict {
  DegreeSequence pi;
  std::size_t classes = 0;
  BigCount labeled;
  BigCount max_phi;
  bool unique_greedy = false;
};

inline SequenceVerdict verify_sequence(const DegreeSequence& pi, std::size_t limit) {
  const TreeClassSummary s = extremal_by_enumeration(pi, limit);
  const GreedyTree g = build_greedy_bfs(pi);
  const bool ok = s.maximizers.size() == 1 &&
                  s.classes[s.maximizers[0]].code == canonical_code(g.tree) &&
                  s.max_phi == count_subtrees(g.tree);
  return {pi, s.classes.size(), s.labeled_count, s.max_phi, ok};
}

inline Json verdict_json(const SequenceVerdict& v) {
  return Json{{"pi", v.pi.values()},
              {"classes", v.classes},
              {"labeled_trees", to_decimal(v.labeled)},
              {"max_phi", to_decimal(v.max_phi)},
              {"unique_maximizer_is_greedy", v.unique_greedy}};
}

inline Json cmd_verify(const Options& o, std::ostream& text) {
  const std::size_t limit = oracle_limit();
  if (!o.pi.empty()) {
    const DegreeSequence pi = read_sequence(o.pi);
    if (pi.size() > limit) {
      throw TooLarge("n = " + std::to_string(pi.size()) + " exceeds oracle limit " + std::to_string(limit));
    }
    const SequenceVerdict v = verify_sequence(pi, limit);
    text << (v.unique_greedy ? "PASS" : "FAIL") << " pi=" << format_sequence(pi) << " classes=" << v.classes
         << " labeled=" << v.labeled << " max_phi=" << v.max_phi
         << (v.unique_greedy ? " unique maximizer = greedy BFS tree" : " greedy BFS tree is not the unique maximizer")
         << "\n";
    Json j{{"inputs", {{"pi", pi.values()}}}, {"outputs", {{"status", v.unique_greedy ? "PASS" : "FAIL"}, {"result", verdict_json(v)}}}};
    if (!v.unique_greedy) throw Violation(j.dump());
    return j;
  }

  const std::size_t n = o.all_n;
  if (n > limit) throw TooLarge("n = " + std::to_string(n) + " exceeds oracle limit " + std::to_string(limit));
  const std::vector<DegreeSequence> seqs = all_tree_degree_sequences(n);
  std::vector<std::optional<SequenceVerdict>> verdicts(seqs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seqs.size(); i = next++) verdicts[i] = verify_sequence(seqs[i], limit);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(o.jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<BigCount> greedy_phi;
  for (const auto& s : seqs) greedy_phi.push_back(count_subtrees(build_greedy_bfs(s).tree));
  std::size_t pairs = 0, order_violations = 0, class_violations = 0;
  Json failures = Json::array();
  for (const auto& v : verdicts) {
    if (!v->unique_greedy) {
      ++class_violations;
      failures.push_back({{"kind", "uniqueness"}, {"pi", v->pi.values()}});
    }
  }
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      if (majorizes(seqs[i], seqs[j]) != Order::Less) continue;
      ++pairs;
      if (!(greedy_phi[i] < greedy_phi[j])) {
        ++order_violations;
        failures.push_back({{"kind", "ordering"}, {"lower", seqs[i].values()}, {"upper", seqs[j].values()}});
      }
    }
  }
  const bool ok = class_violations == 0 && order_violations == 0;
  text << (ok ? "PASS" : "FAIL") << " n=" << n << " sequences=" << seqs.size() << " comparable_pairs=" << pairs
       << " uniqueness_violations=" << class_violations << " ordering_violations=" << order_violations << "\n";
  for (const auto& v : verdicts) {
    text << "  " << format_sequence(v->pi) << " classes=" << v->classes << " max_phi=" << v->max_phi
         << (v->unique_greedy ? "" : " FAIL") << "\n";
  }
  Json per = Json::array();
  for (const auto& v : verdicts) per.push_back(verdict_json(*v));
  Json j{{"inputs", {{"all_n", n}}},
         {"outputs",
          {{"status", ok ? "PASS" : "FAIL"},
           {"sequences", seqs.size()},
           {"comparable_pairs", pairs},
           {"uniqueness_violations", class_violations},
           {"ordering_violations", order_violations},
           {"failures", failures},
           {"per_sequence", per}}}};
  if (!ok) throw Violation(j.dump());
  return j;
}

inline Json cmd_order(const Options& o, std::ostream& text) {
  const DegreeSequence a = read_sequence(o.a);
  const DegreeSequence b = read_sequence(o.b);
  const Order rel = majorizes(a, b);
  text << "relation: " << to_string(rel) << "\n";
  Json out{{"relation", to_string(rel)}};
  if (rel != Order::Incomparable) {
    const MajorizationChain chain = rel == Order::Greater ? majorization_chain(b, a) : majorization_chain(a, b);
    Json steps = Json::array();
    text << "chain (" << chain.steps.size() << "):\n";
    for (const auto& s : chain.steps) {
      const BigCount phi = count_subtrees(build_greedy_bfs(s).tree);
      text << "  " << format_sequence(s) << "  phi=" << phi << "\n";
      steps.push_back({{"pi", s.values()}, {"phi", to_decimal(phi)}});
    }
    out["chain_length"] = chain.steps.size();
    out["chain"] = steps;
  }
  return Json{{"inputs", {{"a", a.values()}, {"b", b.values()}}}, {"outputs", out}};
}

inline Json cmd_class(const Options& o, std::ostream& text) {
  ClassAnswer ans = [&] {
    if (o.type == "maxdeg") return max_degree_extremal(o.n, o.k);
    if (o.type == "leaves") return leaves_extremal(o.n, o.k);
    if (o.type == "alpha") return independence_extremal(o.n, o.k);
    return matching_extremal(o.n, o.k);
  }();
  text << "class: " << ans.kind << " n=" << ans.n << " k=" << ans.parameter << "\n";
  text << "pi: " << format_sequence(ans.extremal_pi) << "\n";
  text << "phi: " << ans.phi << "\n";
  text << "printed: " << (ans.printed_formula_value ? to_decimal(*ans.printed_formula_value) : "n/a") << "\n";
  text << "discrepancy: " << (ans.discrepancy_flag ? "true" : "false") << "\n";
  Json out{{"pi", ans.extremal_pi.values()},
           {"phi", to_decimal(ans.phi)},
           {"printed_formula_value",
            ans.printed_formula_value ? Json(to_decimal(*ans.printed_formula_value)) : Json(nullptr)},
           {"discrepancy", ans.discrepancy_flag}};
  if (ans.params) {
    text << "p,r,q: " << ans.params->p << "," << ans.params->r << "," << ans.params->q << "\n";
    out["params"] = {{"p", ans.params->p}, {"r", ans.params->r}, {"q", ans.params->q}};
  }
  if (ans.printed_sequence) {
    text << "printed pi: " << format_sequence(*ans.printed_sequence)
         << (ans.sequence_discrepancy ? " (differs)" : "") << "\n";
    out["printed_pi"] = *ans.printed_sequence;
    out["sequence_discrepancy"] = ans.sequence_discrepancy;
  }
  out["edges"] = edges_json(ans.extremal_tree);
  text << "edges:\n" << format_edge_list(ans.extremal_tree);
  return Json{{"inputs", {{"type", o.type}, {"n", o.n}, {"k", o.k}}}, {"outputs", out}};
}

// --- driver ----------------------------------------------------------------

inline int exit_code_of(const Error& e) {
  if (dynamic_cast<const Violation*>(&e)) return kViolation;
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const TooLarge*>(&e)) return kTooLarge;
  return kInvalid;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subtree counting and extremal trees for degree sequences", "subtree"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit a JSON report");
    sub->add_flag("--timing", o.timing, "Include wall-clock timing");
  };
  auto* count = app.add_subcommand("count", "Count subtrees of a tree given as an edge-list file");
  count->add_option("file", o.file, "Edge-list file")->required();
  add_common(count);

  auto* build = app.add_subcommand("build", "Build the greedy BFS tree for a degree sequence");
  build->add_option("--pi", o.pi, "Comma-separated degree sequence")->required();
  add_common(build);

  auto* verify = app.add_subcommand("verify", "Check extremality by exhaustive enumeration");
  auto* vpi = verify->add_option("--pi", o.pi, "Comma-separated degree sequence");
  auto* vall = verify->add_option("--all-n", o.all_n, "Sweep every degree sequence of this length");
  vpi->excludes(vall);
  verify->add_option("--jobs", o.jobs, "Worker threads for --all-n")->check(CLI::PositiveNumber);
  add_common(verify);

  auto* order = app.add_subcommand("order", "Compare two degree sequences under majorization");
  order->add_option("--a", o.a, "First sequence")->required();
  order->add_option("--b", o.b, "Second sequence")->required();
  add_common(order);

  auto* klass = app.add_subcommand("class", "Extremal tree of a constraint class");
  klass->add_option("--type", o.type, "maxdeg | leaves | alpha | beta")
      ->required()
      ->check(CLI::IsMember({"maxdeg", "leaves", "alpha", "beta"}));
  klass->add_option("--n", o.n, "Number of vertices")->required();
  klass->add_option("--k", o.k, "Class parameter")->required();
  add_common(klass);

  try {
    app.parse(argc, argv);
    if (verify->parsed() && vpi->count() == 0 && vall->count() == 0) {
      throw CLI::RequiredError("verify needs --pi or --all-n");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  std::string command;
  for (auto* sub : {count, build, verify, order, klass}) {
    if (sub->parsed()) command = sub->get_name();
  }

  std::ostringstream text;
  const auto started = std::chrono::steady_clock::now();
  Json body;
  int code = kOk;
  try {
    if (command == "count") body = cmd_count(o, text);
    if (command == "build") body = cmd_build(o, text);
    if (command == "verify") body = cmd_verify(o, text);
    if (command == "order") body = cmd_order(o, text);
    if (command == "class") body = cmd_class(o, text);
  } catch (const Error& e) {
    code = exit_code_of(e);
    if (code != kViolation) {
      err << (code == kParse ? "parse error: " : code == kTooLarge ? "too large: " : "invalid input: ")
          << e.what() << "\n";
      return code;
    }
    // a violation still produces its report
    body = Json::parse(e.what());
  }
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (o.json) {
    Json report{{"command", command},
                {"version", kVersion},
                {"inputs", body["inputs"]},
                {"outputs", body["outputs"]},
                {"timing", o.timing ? Json{{"elapsed_ms", elapsed}} : Json(nullptr)}};
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
    if (o.timing) out << "elapsed_ms: " << elapsed << "\n";
  }
  return code;
}

}  // namespace subtree::cli

#endif  // SUBTREE_CLI_HPP
