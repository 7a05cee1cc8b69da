#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "pursuitwidth/verify.hpp"

using json = nlohmann::ordered_json;
using namespace pw;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kPass = 0, kCheckFailure = 1, kInputError = 2, kResourceError = 3 };

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json base_report(const std::string& command, const std::vector<std::string>& argv) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["argv"] = argv;
  return r;
}

json to_json(const CheckResult& c) {
  json j;
  j["instance"] = c.instance;
  j["ok"] = c.ok;
  json values = json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  j["values"] = values;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

json to_json(VertexSet s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

std::string labelled_edge_list(const Digraph& g) {
  std::string out;
  if (g.has_labels())
    for (Vertex v = 0; v < g.size(); ++v) out += "# label " + std::to_string(v) + " " + g.label(v) + "\n";
  return out + emit_edge_list(g);
}

struct Options {
  std::string measure = "dw";
  int r = 0, k = 0, n = 0, nmax = 4, jobs = default_jobs();
  int height = 0, branching = 0, count = 0;
  double p = 0.4;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  std::string out, graph, format = "edges";
  std::vector<std::string> args;
};

std::size_t budget_of(const Options& o) { return o.budget > 0 ? o.budget : default_budget(); }

int cmd_width(const Options& o, const std::vector<std::string>& argv) {
  if (o.args.size() != 1) throw ConfigError("width expects one graph file");
  const std::string text = read_text_file(o.args[0]);
  Digraph g = [&] {
    try {
      return parse_edge_list(text);
    } catch (const InputError& e) {
      throw InputError(o.args[0] + ": " + e.what());
    }
  }();
  Measure m = parse_measure(o.measure);
  int r = o.r > 0 ? o.r : (m == Measure::DwR || m == Measure::TwR ? 2 : 1);
  auto t0 = std::chrono::steady_clock::now();
  int value = width(g, m, r, budget_of(o));
  json rep = base_report("width", argv);
  rep["input"] = {{"file", o.args[0]}, {"digest", digest(text)}, {"vertices", g.size()}, {"edges", g.edge_count()}};
  rep["results"] = {{"measure", to_string(m)}, {"r", r}, {"value", value}};
  rep["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_out(o.out, rep.dump(2) + "\n");
  return kPass;
}

int cmd_verify(const Options& o, const std::vector<std::string>& argv) {
  if (o.args.size() != 1) throw ConfigError("verify expects one suite name");
  VerifyParams p;
  p.corpus.nmax = o.nmax;
  p.corpus.seed = o.seed;
  p.parity_seed = o.seed;
  p.jobs = std::max(1, o.jobs);
  p.budget = budget_of(o);
  p.r = o.r;
  if (o.n > 0) p.n = o.n;
  if (o.count > 0) {
    p.corpus.random_count = o.count;
    p.parity_games = o.count;
  }
  json rep = base_report("verify", argv);
  if (!o.graph.empty()) {
    std::string text = read_text_file(o.graph);
    p.graph = NamedGraph{o.graph, parse_edge_list(text)};
    rep["input"] = {{"file", o.graph}, {"digest", digest(text)}};
  }
  SuiteReport res = run_suite(o.args[0], p);
  rep["suite"] = res.suite;
  rep["passed"] = res.ok();
  rep["total"] = res.checks.size();
  rep["failures"] = res.failures();
  json checks = json::array();
  for (const auto& c : res.checks) checks.push_back(to_json(c));
  rep["checks"] = checks;
  rep["seconds"] = res.seconds;
  write_out(o.out, rep.dump(2) + "\n");
  std::cerr << res.suite << ": " << (res.ok() ? "pass" : "FAIL") << " (" << res.checks.size() - res.failures() << "/"
            << res.checks.size() << ")\n";
  return res.ok() ? kPass : kCheckFailure;
}

int cmd_generate(const Options& o, const std::vector<std::string>&) {
  if (o.args.size() != 1) throw ConfigError("generate expects one family name");
  const std::string& fam = o.args[0];
  auto need = [](int v, const char* flag) {
    if (v <= 0) throw ConfigError(std::string("missing or non-positive ") + flag);
    return v;
  };
  Digraph g;
  if (fam == "two-tree") g = two_tree_graph(need(o.n, "--n")).graph;
  else if (fam == "tree-clique") g = tree_clique_product(need(o.r, "--r"), need(o.k, "--k"));
  else if (fam == "hierarchy-tree") g = hierarchy_tree(need(o.r, "--r")).graph;
  else if (fam == "tree") g = full_tree(need(o.branching, "--branching"), need(o.height, "--height")).graph;
  else if (fam == "cycle") g = directed_cycle(need(o.n, "--n"));
  else if (fam == "complete") g = complete_graph(need(o.n, "--n"));
  else if (fam == "random") {
    if (o.p < 0 || o.p > 1) throw ConfigError("--p must be in [0, 1]");
    g = random_digraph(need(o.n, "--n"), o.p, o.seed);
  } else
    throw ConfigError("unknown family '" + fam + "' (two-tree, tree-clique, hierarchy-tree, tree, cycle, complete, random)");
  if (o.format == "dot") write_out(o.out, emit_dot(g));
  else if (o.format == "edges") write_out(o.out, labelled_edge_list(g));
  else throw ConfigError("unknown format '" + o.format + "' (edges, dot)");
  return kPass;
}

int cmd_parity(const Options& o, const std::vector<std::string>& argv) {
  if (o.args.size() < 2 || o.args.size() > 3)
    throw ConfigError("parity expects <solve|powerset|solve-imperfect> <game file> [observation file]");
  const std::string& action = o.args[0];
  const std::string text = read_text_file(o.args[1]);
  ParityGame pg = [&] {
    try {
      return parse_parity_game(text);
    } catch (const InputError& e) {
      throw InputError(o.args[1] + ": " + e.what());
    }
  }();
  ObservationEquiv eq = ObservationEquiv::identity(pg.size());
  std::string obs_text;
  if (o.args.size() == 3) {
    obs_text = read_text_file(o.args[2]);
    try {
      eq = parse_observations(obs_text, pg.size());
    } catch (const InputError& e) {
      throw InputError(o.args[2] + ": " + e.what());
    }
  }
  if (auto errs = validate(pg, eq); !errs.empty()) {
    std::string all;
    for (const auto& e : errs) all += "\n  " + e;
    throw InputError("invalid game:" + all);
  }
  json rep = base_report("parity " + action, argv);
  rep["input"] = {{"game", o.args[1]}, {"digest", digest(text + obs_text)}, {"positions", pg.size()}};

  if (action == "powerset") {
    KnowledgeGame kg = powerset_construct(pg, eq);
    std::string game = emit_parity_game(kg.game);
    for (std::size_t i = 0; i < kg.sets.size(); ++i)
      game += "# knowledge " + std::to_string(i) + " " + to_string(kg.sets[i]) + "\n";
    write_out(o.out, game);
    return kPass;
  }
  if (action == "solve") {
    GameSolution sol = zielonka_solve(pg);
    std::string check = solution_error(sol.arena, sol.raw);
    VertexSet w0, w1;
    json strat = json::object();
    for (int v = 0; v < pg.size(); ++v) {
      (sol.win0[v] ? w0 : w1).insert(v);
      if (sol.action[v] >= 0) strat[std::to_string(v)] = pg.actions[sol.action[v]];
      if (sol.move1[v] >= 0) strat[std::to_string(v)] = sol.move1[v];
    }
    rep["results"] = {{"winner", sol.player0_wins_init ? 0 : 1},
                      {"win0", to_json(w0)},
                      {"win1", to_json(w1)},
                      {"strategy", strat},
                      {"verified", check.empty()}};
    if (!check.empty()) rep["results"]["verification_error"] = check;
    write_out(o.out, rep.dump(2) + "\n");
    return check.empty() ? kPass : kCheckFailure;
  }
  if (action == "solve-imperfect") {
    ImperfectResult res = solve_imperfect(pg, eq);
    json strat = json::array();
    for (auto [bits, a] : res.strategy) strat.push_back({{"knowledge", to_json(VertexSet(bits))}, {"action", pg.actions[a]}});
    rep["results"] = {{"winner", res.player0_wins ? 0 : 1},
                      {"knowledge_sets", res.knowledge.sets.size()},
                      {"strategy", strat},
                      {"verified", res.verification.empty()}};
    if (!res.verification.empty()) rep["results"]["verification_error"] = res.verification;
    write_out(o.out, rep.dump(2) + "\n");
    return res.verification.empty() ? kPass : kCheckFailure;
  }
  throw ConfigError("unknown parity action '" + action + "' (solve, powerset, solve-imperfect)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops-and-robbers widths of digraphs, strategy checks, and parity games"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> args(argv, argv + argc);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.out, "Write the result to this file instead of stdout");
    sub->add_option("--budget", o.budget, "Position budget per search (default: PURSUITWIDTH_BUDGET or built-in)");
  };

  auto* width_cmd = app.add_subcommand("width", "Compute a width measure of an edge-list graph");
  width_cmd->add_option("graph", o.args, "Edge-list file")->required();
  width_cmd->add_option("--measure", o.measure, "dw, dw_r, tw_r, tw or dpw")->capture_default_str();
  width_cmd->add_option("--r", o.r, "Number of robbers for dw_r/tw_r (default 2)");
  common(width_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify_cmd->add_option("suite", o.args, "One of: " + suites)->required();
  verify_cmd->add_option("--graph", o.graph, "Check a single edge-list graph instead of the corpus");
  verify_cmd->add_option("--nmax", o.nmax, "Largest exhaustive corpus size")->capture_default_str();
  verify_cmd->add_option("--n", o.n, "Family size for the two-tree suite");
  verify_cmd->add_option("--r", o.r, "Robber count");
  verify_cmd->add_option("--count", o.count, "Random instances (graphs or parity games)");
  verify_cmd->add_option("--seed", o.seed, "Seed for random instances")->capture_default_str();
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  common(verify_cmd);

  auto* gen_cmd = app.add_subcommand("generate", "Write a graph family as an edge list");
  gen_cmd->add_option("family", o.args, "two-tree, tree-clique, hierarchy-tree, tree, cycle, complete or random")->required();
  gen_cmd->add_option("--n", o.n, "Size parameter");
  gen_cmd->add_option("--r", o.r, "Tree level parameter");
  gen_cmd->add_option("--k", o.k, "Clique size");
  gen_cmd->add_option("--branching", o.branching, "Tree branching");
  gen_cmd->add_option("--height", o.height, "Tree height");
  gen_cmd->add_option("--p", o.p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", o.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--format", o.format, "edges or dot")->capture_default_str();
  common(gen_cmd);

  auto* parity_cmd = app.add_subcommand("parity", "Solve parity games, optionally with observation classes");
  parity_cmd->add_option("args", o.args, "<solve|powerset|solve-imperfect> <game file> [observation file]")
      ->required()
      ->expected(2, 3);
  common(parity_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (width_cmd->parsed()) return cmd_width(o, args);
    if (verify_cmd->parsed()) return cmd_verify(o, args);
    if (gen_cmd->parsed()) return cmd_generate(o, args);
    if (parity_cmd->parsed()) return cmd_parity(o, args);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << " (budget " << e.bound() << " positions";
    if (e.at_k() >= 0) std::cerr << ", at k=" << e.at_k();
    std::cerr << ")\n";
    return kResourceError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConfigError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kInputError;
}
