#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biconn/criticality.hpp"
#include "biconn/errors.hpp"
#include "biconn/graph_io.hpp"
#include "biconn/hardness.hpp"
#include "biconn/kernel.hpp"
#include "biconn/oracles.hpp"
#include "biconn/wbd_solver.hpp"

namespace biconn::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream ss;
  ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

// Whitespace-separated 1-based ids; '#' starts a comment.
std::vector<int> read_ids(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<int> ids;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line.substr(0, line.find('#')));
    for (std::string token; ls >> token;) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
        throw ParseError(line_no, "expected positive id in witness, got '" + token + "'");
      }
      ids.push_back(value - 1);
    }
  }
  return ids;
}

WbdInstance load_wbd(const std::string& text, int k, double target) {
  AnnotatedGraph parsed = parse_graph_string(text);
  if (k < 0) throw InvalidInput("k must be non-negative");
  WbdInstance inst;
  inst.graph = std::move(parsed.graph);
  inst.weight = std::move(parsed.weight);
  inst.frozen = std::move(parsed.frozen);
  inst.k = k;
  inst.target = std::max(0.0, target);
  return inst;
}

std::vector<int> one_based(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  for (int& id : ids) ++id;
  return ids;
}

void write_instance_file(const std::string& path, std::ostream& fallback,
                         const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(fallback);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  emit(out);
}

struct Common {
  std::string path;
  int k = 0;
  double target = 0.0;
  bool no_timing = false;
};

json base_report(const std::string& subcommand, const std::string& text) {
  json report;
  report["subcommand"] = subcommand;
  report["input_digest"] = digest(text);
  return report;
}

void stamp(json& report, const Common& common, Clock::time_point start) {
  if (common.no_timing) return;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int cmd_solve(const Common& common, bool explain, bool oracle_check, int jobs, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  auto start = Clock::now();
  std::string text = read_file(common.path);
  WbdInstance inst = load_wbd(text, common.k, common.target);
  if (!is_biconnected(inst.graph)) throw InvalidInput("input graph is not biconnected");

  SolverConfig config;
  config.jobs = std::max(1, jobs);
  if (explain) {
    // Partner analyses only happen above mu(k) potential edges.
    config.on_partner_analysis = [&err](const PartnerAnalysis& pa, std::optional<Stretch> stretch) {
      write_partner_analysis(err, pa, stretch);
    };
    config.on_irrelevant_edge = [&err](const WbdInstance&, EdgeId e) {
      err << "irrelevant edge " << e + 1 << " moved to E-infinity\n";
    };
  }
  SolveResult result = solve(inst, config);

  json report = base_report("solve", text);
  report["k"] = common.k;
  report["target"] = inst.target;
  report["seed"] = seed;
  report["answer"] = result.solution ? "yes" : "no";
  report["witness"] = result.solution ? one_based(result.solution->edges) : std::vector<int>{};
  report["weight"] = result.solution ? result.solution->weight : 0.0;
  const SolverStats& s = result.stats;
  report["counters"] = {{"branch_nodes", s.nodes},
                        {"max_depth", s.max_depth},
                        {"max_branch_factor", s.max_branch_factor},
                        {"irrelevant_edges", s.irrelevant_edges},
                        {"enumerations", s.enumerations},
                        {"partner_analyses", s.partner_analyses}};

  int code = result.solution ? kYes : kNo;
  if (oracle_check) {
    try {
      auto truth = oracle_wbd(normalize(inst));
      bool agrees = truth.has_value() == result.solution.has_value() &&
                    (!truth || std::abs(truth->weight - result.solution->weight) <= 1e-9);
      report["oracle_agrees"] = agrees;
      if (!agrees) code = kInternal;
    } catch (const BudgetExceeded& e) {
      report["oracle_agrees"] = nullptr;
      report["oracle_note"] = e.what();
    }
  }
  stamp(report, common, start);
  out << report.dump(2) << '\n';
  return code;
}

int cmd_kernelize(const Common& common, const std::string& provider, int max_terminals, const std::string& out_path,
                  std::ostream& out) {
  auto start = Clock::now();
  std::string text = read_file(common.path);
  WbdInstance inst = load_wbd(text, common.k, common.k);
  if (!is_biconnected(inst.graph)) throw InvalidInput("input graph is not biconnected");
  if (!is_unit_weight(inst)) throw InvalidInput("kernelize accepts unweighted instances only (weight 1 on every non-frozen edge)");

  KernelConfig config;
  config.provider.kind = provider == "exhaustive" ? ProviderKind::exhaustive : ProviderKind::trivial;
  config.provider.max_terminals = max_terminals;
  KernelResult result = kernelize(inst, config);

  if (!out_path.empty()) {
    write_instance_file(out_path, out, [&](std::ostream& os) {
      std::vector<std::string> comments = {"k " + std::to_string(result.instance.k)};
      write_graph(os, result.instance.graph, result.instance.weight, result.instance.frozen, comments);
    });
  }

  json report = base_report("kernelize", text);
  const KernelStats& s = result.stats;
  const char* answer = result.outcome == KernelOutcome::constant_yes  ? "yes"
                       : result.outcome == KernelOutcome::constant_no ? "no"
                                                                      : "unknown";
  report["answer"] = answer;
  report["provider"] = provider;
  report["k"] = {{"before", s.k_before}, {"after", s.k_after}};
  report["potential_edges"] = {{"before", s.f_before}, {"after_phase1", s.f_after_phase1}, {"after", s.f_after}};
  report["vertices"] = {{"before", s.v_before}, {"after", s.v_after}};
  report["rules_fired"] = {{"zero", s.rule_zero}, {"one", s.rule_one}, {"torso_shortcuts", s.shortcut_edges}};
  report["counters"] = {{"irrelevant_edges", s.irrelevant_edges},
                        {"partner_analyses", s.partner_analyses},
                        {"z_size", s.z_size},
                        {"y_size", s.y_size}};
  if (!s.phase1_verdict.empty()) report["phase1_verdict"] = s.phase1_verdict;
  report["mu_k"] = mu(s.k_before);
  stamp(report, common, start);
  out << report.dump(2) << '\n';
  return result.outcome == KernelOutcome::constant_no ? kNo : kYes;
}

int cmd_gen(const Common& common, const std::string& kind, const std::string& out_path, std::ostream& out) {
  auto start = Clock::now();
  std::string text = read_file(common.path);
  UndirectedGraph g = parse_graph_string(text).graph;
  std::vector<std::string> comments = {"generated from an independent set instance with k " +
                                       std::to_string(common.k)};
  Digraph d;
  std::vector<std::string> notes;
  if (kind == "pcpsc") {
    PcInstance pc = gen_pc_psc(g, common.k);
    d = std::move(pc.digraph);
    notes = std::move(pc.map.notes);
  } else {
    VdInstance vd = gen_vd_psc(g, common.k);
    d = std::move(vd.digraph);
    notes = std::move(vd.notes);
  }
  comments.insert(comments.begin(), kind);
  if (out_path.empty() || out_path == "-") {
    write_digraph(out, d, notes, comments);
    return kYes;
  }
  write_instance_file(out_path, out, [&](std::ostream& os) { write_digraph(os, d, notes, comments); });
  json report = base_report("gen", text);
  report["kind"] = kind;
  report["k"] = common.k;
  report["vertices"] = d.vertex_count();
  report["arcs"] = d.arc_count();
  stamp(report, common, start);
  out << report.dump(2) << '\n';
  return kYes;
}

OracleBudget budget_from(int max_n, int max_m, int max_k, std::int64_t max_candidates) {
  return {max_n, max_m, max_k, max_candidates};
}

int cmd_oracle(const Common& common, const std::string& kind, const OracleBudget& budget, std::ostream& out) {
  auto start = Clock::now();
  std::string text = read_file(common.path);
  json report = base_report("oracle", text);
  report["kind"] = kind;
  report["k"] = common.k;
  std::optional<std::vector<int>> witness;
  if (kind == "wbd") {
    WbdInstance inst = load_wbd(text, common.k, common.target);
    report["target"] = inst.target;
    if (auto s = oracle_wbd(inst, budget)) {
      witness = s->edges;
      report["weight"] = s->weight;
    }
  } else if (kind == "is") {
    witness = oracle_is(parse_graph_string(text).graph, common.k, budget);
  } else if (kind == "pcpsc") {
    // Sequences keep their order: contraction is order sensitive.
    if (auto seq = oracle_pcpsc(parse_digraph_string(text), common.k, budget)) {
      std::vector<int> ids;
      for (ArcId a : *seq) ids.push_back(a + 1);
      report["answer"] = "yes";
      report["witness"] = ids;
      stamp(report, common, start);
      out << report.dump(2) << '\n';
      return kYes;
    }
  } else {
    witness = oracle_vdpsc(parse_digraph_string(text), common.k, budget);
  }
  report["answer"] = witness ? "yes" : "no";
  report["witness"] = witness ? one_based(*witness) : std::vector<int>{};
  stamp(report, common, start);
  out << report.dump(2) << '\n';
  return witness ? kYes : kNo;
}

int cmd_verify(const Common& common, const std::string& kind, const std::string& witness_path, std::ostream& out) {
  std::string text = read_file(common.path);
  std::vector<int> ids = read_ids(witness_path);
  bool valid = false;
  if (kind == "wbd") {
    WbdInstance inst = load_wbd(text, common.k, common.target);
    valid = is_biconnected(inst.graph) && is_solution(normalize(inst), ids);
  } else if (kind == "pcpsc") {
    valid = is_pcpsc_witness(parse_digraph_string(text), common.k, ids);
  } else {
    valid = is_vdpsc_witness(parse_digraph_string(text), common.k, ids);
  }
  json report = base_report("verify", text);
  report["kind"] = kind;
  report["k"] = common.k;
  std::vector<int> shown = ids;
  for (int& id : shown) ++id;
  report["witness"] = shown;
  report["answer"] = valid ? "valid" : "invalid";
  out << report.dump(2) << '\n';
  return valid ? kYes : kNo;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biconnectivity deletion solver, kernel and hardness tools"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_target) {
    sub->add_option("path", common.path, "instance file")->required();
    sub->add_option("-k,--k", common.k, "budget / solution size")->required();
    if (with_target) sub->add_option("-w,--target", common.target, "target weight w*");
    sub->add_flag("--no-timing", common.no_timing, "omit wall-clock time from the report");
  };

  bool explain = false, oracle_check = false;
  int jobs = 1;
  std::uint64_t seed = 0;
  auto* solve_cmd = app.add_subcommand("solve", "solve weighted biconnectivity deletion");
  add_common(solve_cmd, true);
  solve_cmd->add_flag("--explain", explain, "dump partner analyses to stderr");
  solve_cmd->add_flag("--oracle-check", oracle_check, "cross-check against the brute-force oracle");
  solve_cmd->add_option("--jobs", jobs, "parallel branches")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed, "reserved; the solver is deterministic");

  std::string provider = "trivial", out_path;
  int max_terminals = CutCoveringProvider{}.max_terminals;
  auto* kernel_cmd = app.add_subcommand("kernelize", "kernelize an unweighted instance");
  add_common(kernel_cmd, false);
  kernel_cmd->add_option("--provider", provider, "cut-covering provider")
      ->check(CLI::IsMember({"trivial", "exhaustive"}));
  kernel_cmd->add_option("--max-terminals", max_terminals, "exhaustive provider limit on |X|");
  kernel_cmd->add_option("--out", out_path, "write the reduced instance here");
  kernel_cmd->add_option("--seed", seed, "reserved; providers are deterministic");

  std::string kind;
  auto* gen_cmd = app.add_subcommand("gen", "generate a hardness instance from independent set");
  gen_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"pcpsc", "vdpsc"}));
  add_common(gen_cmd, false);
  gen_cmd->add_option("--out", out_path, "write the digraph here instead of stdout");

  OracleBudget defaults;
  int max_n = defaults.max_vertices, max_m = defaults.max_edges, max_k = defaults.max_k;
  std::int64_t max_candidates = defaults.max_candidates;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  oracle_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"wbd", "pcpsc", "vdpsc", "is"}));
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--max-vertices", max_n);
  oracle_cmd->add_option("--max-edges", max_m);
  oracle_cmd->add_option("--max-k", max_k);
  oracle_cmd->add_option("--max-candidates", max_candidates);

  std::string witness_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a witness against its instance");
  verify_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"wbd", "pcpsc", "vdpsc"}));
  add_common(verify_cmd, true);
  verify_cmd->add_option("--witness", witness_path, "file of 1-based ids")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kYes : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(common, explain, oracle_check, jobs, seed, out, err);
    if (kernel_cmd->parsed()) return cmd_kernelize(common, provider, max_terminals, out_path, out);
    if (gen_cmd->parsed()) return cmd_gen(common, kind, out_path, out);
    if (oracle_cmd->parsed()) return cmd_oracle(common, kind, budget_from(max_n, max_m, max_k, max_candidates), out);
    return cmd_verify(common, kind, witness_path, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kBudget;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace biconn::cli
