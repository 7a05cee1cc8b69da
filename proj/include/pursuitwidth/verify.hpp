#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "arena.hpp"
#include "families.hpp"
#include "multiply.hpp"
#include "parity.hpp"
#include "strategy.hpp"

namespace pw {

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep
// index order.
template <class T>
std::vector<T> parallel_map(int jobs, std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

inline int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------
// Graph corpus

struct NamedGraph {
  std::string name;
  Digraph graph;
};

namespace detail {

inline std::uint64_t adjacency_code(const Digraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  std::uint64_t code = 0;
  for (auto [u, v] : g.edges()) code |= std::uint64_t{1} << (perm[u] * n + perm[v]);
  return code;
}

inline std::uint64_t canonical_code(const Digraph& g) {
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, adjacency_code(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// Strongly connected loop-free digraphs on n vertices, one per isomorphism
// class, ordered by canonical code.
inline std::vector<Digraph> strongly_connected_classes(int n) {
  if (n < 1 || n > 5) throw ConfigError("exhaustive enumeration supports 1..5 vertices");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  std::map<std::uint64_t, Digraph> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) es.push_back(slots[i]);
    Digraph g(n, es);
    if (!is_strongly_connected(g)) continue;
    std::uint64_t code = detail::canonical_code(g);
    if (!seen.count(code)) {
      std::vector<Edge> canon;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (code >> (u * n + v) & 1) canon.emplace_back(u, v);
      seen.emplace(code, Digraph(n, canon));
    }
  }
  std::vector<Digraph> out;
  for (auto& [code, g] : seen) out.push_back(g);
  return out;
}

struct CorpusParams {
  int nmax = 4;
  int random_count = 200;
  int random_n = 5;
  double p = 0.4;
  std::uint64_t seed = 1;
};

inline std::vector<NamedGraph> exhaustive_corpus(int nmax) {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Digraph> cls = strongly_connected_classes(n);
    for (std::size_t i = 0; i < cls.size(); ++i)
      out.push_back({"sc" + std::to_string(n) + "-" + std::to_string(i), cls[i]});
  }
  return out;
}

inline std::vector<NamedGraph> random_corpus(const CorpusParams& p) {
  std::vector<NamedGraph> out;
  for (std::uint64_t s = p.seed; static_cast<int>(out.size()) < p.random_count; ++s) {
    Digraph g = random_digraph(p.random_n, p.p, s);
    if (is_strongly_connected(g)) out.push_back({"random-n" + std::to_string(p.random_n) + "-s" + std::to_string(s), g});
  }
  return out;
}

inline std::vector<NamedGraph> full_corpus(const CorpusParams& p) {
  std::vector<NamedGraph> out = exhaustive_corpus(p.nmax);
  for (auto& g : random_corpus(p)) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct CheckResult {
  CheckResult(std::string name = "") : instance(std::move(name)) {}
  std::string instance;
  bool ok = true;
  std::string detail;
  std::vector<std::pair<std::string, long long>> values;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  int failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; }));
  }
  bool ok() const { return failures() == 0 && !checks.empty(); }
};

struct VerifyParams {
  CorpusParams corpus;
  int jobs = default_jobs();
  std::size_t budget = default_budget();
  int n = 2;              // family size for the two-tree suite
  int r = 0;              // robber count override (0: suite default)
  std::optional<NamedGraph> graph;  // single-graph mode
  int parity_games = 100;
  std::uint64_t parity_seed = 1;
};

namespace detail {

template <class Fn>
SuiteReport run_suite(const std::string& name, Fn&& body) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.checks = body();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline std::vector<NamedGraph> graphs_for(const VerifyParams& p, bool exhaustive_only) {
  if (p.graph) return {*p.graph};
  return exhaustive_only ? exhaustive_corpus(p.corpus.nmax) : full_corpus(p.corpus);
}

}  // namespace detail

// dw_1 <= dw_2 <= dw_n and dw_n = dpw.
inline SuiteReport verify_hierarchy(const VerifyParams& p) {
  return detail::run_suite("hierarchy", [&] {
    auto graphs = detail::graphs_for(p, false);
    return parallel_map<CheckResult>(p.jobs, graphs.size(), [&](std::size_t i) {
      const Digraph& g = graphs[i].graph;
      CheckResult c{graphs[i].name};
      int d1 = cop_number(g, 1, p.budget), d2 = cop_number(g, 2, p.budget);
      int dn = cop_number(g, g.size(), p.budget), dp = invisible_cop_number(g, p.budget);
      c.values = {{"dw_1", d1}, {"dw_2", d2}, {"dw_n", dn}, {"dpw", dp}};
      c.ok = d1 <= d2 && d2 <= dn && dn == dp;
      if (!c.ok) c.detail = "chain broken";
      return c;
    });
  });
}

// Numeric bound dw_r <= r * dw_1 and the multiplied strategy checked against
// every prudent isolating robber team.
inline SuiteReport verify_multiply(const VerifyParams& p) {
  return detail::run_suite("multiply", [&] {
    auto graphs = detail::graphs_for(p, false);
    struct Job {
      std::size_t graph;
      int r;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (p.r > 0) jobs.push_back({i, p.r});
      else {
        jobs.push_back({i, 2});
        if (graphs[i].graph.size() <= 4) jobs.push_back({i, 3});
      }
    }
    return parallel_map<CheckResult>(p.jobs, jobs.size(), [&](std::size_t j) {
      const Digraph& g = graphs[jobs[j].graph].graph;
      const int r = jobs[j].r;
      CheckResult c{graphs[jobs[j].graph].name + " r=" + std::to_string(r)};
      if (!is_strongly_connected(g)) {
        c.ok = false;
        c.detail = "graph is not strongly connected";
        return c;
      }
      const int k = cop_number(g, 1, p.budget);
      const int kr = cop_number(g, r, p.budget);
      SearchConfig cfg;
      cfg.k = k;
      cfg.budget = p.budget;
      PositionalCopStrategy f = cleanup_strategy(g, solver_cop_strategy(solve_search(g, cfg)));
      auto steps = std::make_shared<std::atomic<long long>>(0);
      auto hook = std::make_shared<TeamStepHook>();
      hook->on_step = [steps](const TeamMemory&, const InvariantReport&, const InvariantReport&) { ++*steps; };
      CopStrategy team = multiply_strategy_normalized(g, f, r, hook);
      CopCheckOptions opt = prudent_isolating_adversary(g, r, r * k);
      opt.budget = p.budget;
      StrategyCheck chk = verify_cop_strategy(g, team, opt);
      c.values = {{"dw_1", k}, {"dw_r", kr}, {"r", r}, {"max_cops", chk.max_cops}, {"states", static_cast<long long>(chk.states)},
                  {"checked_steps", *steps}};
      c.ok = kr <= r * k && chk.ok && chk.max_cops <= r * k;
      if (kr > r * k) c.detail = "dw_r exceeds r * dw_1";
      else if (!chk.ok) {
        c.detail = chk.failure;
        c.witness = describe(chk.witness);
      } else c.witness = describe(chk.sample);
      return c;
    });
  });
}

// Cleanup output keeps the normal-form contract and still wins.
inline SuiteReport verify_cleanup(const VerifyParams& p) {
  return detail::run_suite("cleanup", [&] {
    auto graphs = detail::graphs_for(p, true);
    struct Job {
      std::size_t graph;
      int k;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      int k0 = cop_number(graphs[i].graph, 1, p.budget);
      for (int k = k0; k <= graphs[i].graph.size(); ++k) jobs.push_back({i, k});
    }
    return parallel_map<CheckResult>(p.jobs, jobs.size(), [&](std::size_t j) {
      const Digraph& g = graphs[jobs[j].graph].graph;
      const int k = jobs[j].k;
      CheckResult c{graphs[jobs[j].graph].name + " k=" + std::to_string(k)};
      SearchConfig cfg;
      cfg.k = k;
      cfg.budget = p.budget;
      PositionalCopStrategy f = solver_cop_strategy(solve_search(g, cfg));
      PositionalCopStrategy cl = cleanup_strategy(g, f);
      std::string contract = cleanup_contract_error(g, cl);
      StrategyCheck chk = verify_cop_strategy(g, as_strategy(cl), single_robber_check(k));
      c.values = {{"k", k}, {"positions", static_cast<long long>(cl.moves.size())}, {"max_cops", chk.max_cops}};
      c.ok = contract.empty() && chk.ok;
      c.detail = !contract.empty() ? contract : chk.failure;
      if (!chk.ok) c.witness = describe(chk.witness);
      return c;
    });
  });
}

// Isolating and prudent transforms of winning robber strategies (r = 2).
inline SuiteReport verify_robber_normal_forms(const VerifyParams& p) {
  return detail::run_suite("robber-normal-forms", [&] {
    auto graphs = detail::graphs_for(p, false);
    const int r = p.r > 0 ? p.r : 2;
    struct Job {
      std::size_t graph;
      int k;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      int kr = cop_number(graphs[i].graph, r, p.budget);
      for (int k = 1; k < kr; ++k) jobs.push_back({i, k});
    }
    return parallel_map<CheckResult>(p.jobs, jobs.size(), [&](std::size_t j) {
      const Digraph& g = graphs[jobs[j].graph].graph;
      const int k = jobs[j].k;
      CheckResult c{graphs[jobs[j].graph].name + " k=" + std::to_string(k)};
      SearchConfig cfg;
      cfg.k = k;
      cfg.r = r;
      cfg.budget = p.budget;
      auto arena = std::make_shared<const SolvedArena>(g, cfg);
      RobberStrategy base = solver_robber_strategy(arena);

      RobberCheckOptions iso_opt;
      iso_opt.step_check = [&](const std::optional<RobberTurn>&, const CopTurn& to) { return isolating_step_error(g, to); };
      RobberCheck a = cop_search_vs_robber(g, cfg, isolating_transform(g, cfg, base), iso_opt);

      RobberCheckOptions pru_opt;
      pru_opt.step_check = [&](const std::optional<RobberTurn>& from, const CopTurn& to) {
        std::string e = isolating_step_error(g, to);
        return e.empty() ? prudent_step_error(g, from, to) : e;
      };
      RobberCheck b = cop_search_vs_robber(g, cfg, prudent_transform(g, cfg, base), pru_opt);
      c.values = {{"k", k}, {"r", r}, {"isolating_states", static_cast<long long>(a.states)},
                  {"prudent_states", static_cast<long long>(b.states)}};
      c.ok = a.conditions_ok && a.robbers_win && b.conditions_ok && b.robbers_win;
      if (!a.conditions_ok || !a.robbers_win) {
        c.detail = "isolating: " + a.failure;
        c.witness = describe(a.witness);
      } else if (!b.conditions_ok || !b.robbers_win) {
        c.detail = "prudent: " + b.failure;
        c.witness = describe(b.witness);
      }
      return c;
    });
  });
}

// Two-tree family: four top-down cops win unrestricted; n SCC-restricted
// cops lose, by solver and by the explicit robber.
inline SuiteReport verify_two_tree(const VerifyParams& p) {
  return detail::run_suite("two-tree", [&] {
    const int n = p.n;
    TreeFamily f = two_tree_graph(n);
    std::vector<CheckResult> out;
    {
      CheckResult c{"topdown-4-cops n=" + std::to_string(n)};
      CopCheckOptions opt = single_robber_check(4);
      opt.budget = p.budget;
      StrategyCheck chk = verify_cop_strategy(f.graph, two_tree_topdown_cops(n), opt);
      c.ok = chk.ok && chk.max_cops <= 4;
      c.values = {{"vertices", f.graph.size()}, {"max_cops", chk.max_cops}, {"states", static_cast<long long>(chk.states)}};
      c.detail = chk.failure;
      c.witness = describe(chk.ok ? chk.sample : chk.witness);
      out.push_back(c);
    }
    for (SccRule rule : {SccRule::Literal, SccRule::NewPlacements}) {
      const std::string tag = rule == SccRule::Literal ? "literal" : "new-placements";
      SearchConfig cfg;
      cfg.k = n;
      cfg.restrict_to_scc = true;
      cfg.scc_rule = rule;
      cfg.budget = p.budget;
      {
        CheckResult c{"restricted-solver k=" + std::to_string(n) + " " + tag};
        SolveResult res = solve_search(f.graph, cfg);
        c.ok = res.winner == Winner::Robbers;
        c.detail = c.ok ? "robbers win" : "cops win";
        out.push_back(c);
      }
      {
        CheckResult c{"two-tree-robber k=" + std::to_string(n) + " " + tag};
        RobberCheckOptions opt;
        opt.step_check = [&](const std::optional<RobberTurn>&, const CopTurn& to) {
          return two_tree_robber_error(f.coords, to.cops, to.robbers.front());
        };
        RobberCheck chk = cop_search_vs_robber(f.graph, cfg, two_tree_robber(n), opt);
        c.ok = chk.conditions_ok && chk.robbers_win;
        c.values = {{"states", static_cast<long long>(chk.states)}};
        c.detail = chk.failure;
        if (!c.ok) c.witness = describe(chk.witness);
        out.push_back(c);
      }
    }
    return out;
  });
}

// Hierarchy-tree instances: invisible and visible cop numbers, clearing
// schedules, and the separation dw_1(T_2) < dpw(T_2).
inline SuiteReport verify_hierarchy_trees(const VerifyParams& p) {
  return detail::run_suite("tree-family", [&] {
    std::vector<CheckResult> out;
    auto value = [&](const std::string& name, int got, int want) {
      CheckResult c{name};
      c.values = {{"value", got}, {"expected", want}};
      c.ok = got == want;
      out.push_back(c);
      return got;
    };
    int dpw1 = value("dpw(T_1)", invisible_cop_number(hierarchy_tree(1).graph, p.budget), 2);
    int dpw2 = value("dpw(T_2)", invisible_cop_number(hierarchy_tree(2).graph, p.budget), 3);
    value("dw_1(tree-clique 1,2)", cop_number(tree_clique_product(1, 2), 1, p.budget), 4);
    int dw2 = value("dw_1(T_2)", cop_number(hierarchy_tree(2).graph, 1, p.budget), 2);
    {
      CheckResult c{"separation dw_1(T_2) < dpw(T_2)"};
      c.values = {{"dw_1", dw2}, {"dpw", dpw2}};
      c.ok = dw2 < dpw2 && dpw1 == 2;
      out.push_back(c);
    }
    for (auto [r, k] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
      CheckResult c{"schedule (r,k)=(" + std::to_string(r) + "," + std::to_string(k) + ")"};
      Digraph g = tree_clique_product(r, k);
      std::vector<VertexSet> sched = cops_dpw_tree(r, k);
      int most = 0;
      for (VertexSet s : sched) most = std::max(most, s.size());
      std::string err = check_clearing_schedule(g, sched, k * (r + 1));
      c.values = {{"steps", static_cast<long long>(sched.size())}, {"max_cops", most}, {"bound", k * (r + 1)}};
      c.ok = err.empty() && most == k * (r + 1);
      c.detail = err;
      out.push_back(c);
    }
    {
      // Two robbers on tree-clique 1,3 need at least ceil(2 * 2 / 2) = 2 cops.
      CheckResult c{"dw_2(tree-clique 1,3) >= 2"};
      SearchConfig cfg;
      cfg.k = 1;
      cfg.r = 2;
      cfg.budget = p.budget;
      c.ok = solve_search(tree_clique_product(1, 3), cfg).winner == Winner::Robbers;
      out.push_back(c);
    }
    return out;
  });
}

// Symmetric graphs: tw_2 <= 2 * tw_1 (as cop numbers of the symmetric
// closure).
inline SuiteReport verify_symmetric(const VerifyParams& p) {
  return detail::run_suite("symmetric", [&] {
    std::vector<NamedGraph> graphs;
    if (p.graph) graphs.push_back({p.graph->name, symmetric_closure(p.graph->graph)});
    else {
      std::set<std::uint64_t> seen;
      for (auto& ng : exhaustive_corpus(p.corpus.nmax)) {
        Digraph s = symmetric_closure(ng.graph);
        if (seen.insert(detail::canonical_code(s)).second)
          graphs.push_back({ng.name + (is_symmetric(ng.graph) ? "" : "-closure"), s});
      }
    }
    const int r = p.r > 0 ? p.r : 2;
    return parallel_map<CheckResult>(p.jobs, graphs.size(), [&](std::size_t i) {
      CheckResult c{graphs[i].name};
      int t1 = cop_number(graphs[i].graph, 1, p.budget), tr = cop_number(graphs[i].graph, r, p.budget);
      c.values = {{"tw_1", t1}, {"tw_r", tr}, {"r", r}};
      c.ok = tr <= r * t1;
      return c;
    });
  });
}

inline std::vector<std::pair<ParityGame, ObservationEquiv>> parity_corpus(int count, std::uint64_t seed) {
  std::vector<std::pair<ParityGame, ObservationEquiv>> out;
  for (int i = 0; i < count; ++i) {
    RandomGameParams gp;
    gp.positions = 3 + i % 6;
    out.push_back(random_parity_game(gp, seed + static_cast<std::uint64_t>(i)));
  }
  return out;
}

// Knowledge histories lift back; lifted cop strategies on the knowledge
// graph win within k * 2 cops.
inline SuiteReport verify_knowledge_lift(const VerifyParams& p) {
  return detail::run_suite("knowledge-lift", [&] {
    auto games = parity_corpus(p.parity_games, p.parity_seed);
    return parallel_map<CheckResult>(p.jobs, games.size(), [&](std::size_t i) {
      const auto& [pg, eq] = games[i];
      CheckResult c{"game-" + std::to_string(p.parity_seed + i)};
      KnowledgeGame kg = powerset_construct(pg, eq);
      std::string lift = history_lifting_error(pg, kg, 6);
      Digraph g = arena_graph(pg), kgraph = arena_graph(kg.game);
      int k = cop_number(g, 2, p.budget);
      SearchConfig cfg;
      cfg.k = k;
      cfg.r = 2;
      cfg.budget = p.budget;
      PositionalCopStrategy f = solver_cop_strategy(solve_search(g, cfg));
      CopCheckOptions opt = single_robber_check(2 * k);
      opt.budget = p.budget;
      StrategyCheck chk = verify_cop_strategy(kgraph, lift_cop_strategy(g, as_strategy(f), kg, 2), opt);
      int dw = cop_number(kgraph, 1, p.budget);
      c.values = {{"positions", pg.size()}, {"knowledge_sets", kgraph.size()}, {"dw_2", k}, {"dw_knowledge", dw},
                  {"lifted_max_cops", chk.max_cops}};
      c.ok = lift.empty() && chk.ok && chk.max_cops <= 2 * k && dw <= 2 * k;
      c.detail = !lift.empty() ? lift : chk.failure;
      if (!chk.ok) c.witness = describe(chk.witness);
      return c;
    });
  });
}

// Imperfect-information pipeline: observation-based strategies hold in the
// original game, identity observations agree with the perfect-information
// solve, and solver strategies win their regions.
inline SuiteReport verify_imperfect(const VerifyParams& p) {
  return detail::run_suite("imperfect", [&] {
    auto games = parity_corpus(p.parity_games, p.parity_seed);
    return parallel_map<CheckResult>(p.jobs, games.size(), [&](std::size_t i) {
      const auto& [pg, eq] = games[i];
      CheckResult c{"game-" + std::to_string(p.parity_seed + i)};
      ImperfectResult res = solve_imperfect(pg, eq);
      GameSolution sol = zielonka_solve(pg);
      ImperfectResult id = solve_imperfect(pg, ObservationEquiv::identity(pg.size()));
      std::string regions = solution_error(sol.arena, sol.raw);
      c.values = {{"player0_wins", res.player0_wins}, {"player0_wins_full_information", sol.player0_wins_init}};
      c.ok = res.verification.empty() && id.player0_wins == sol.player0_wins_init && regions.empty() &&
             (!res.player0_wins || sol.player0_wins_init);
      if (!res.verification.empty()) c.detail = res.verification;
      else if (id.player0_wins != sol.player0_wins_init) c.detail = "identity observations change the winner";
      else if (!regions.empty()) c.detail = regions;
      else if (!c.ok) c.detail = "player 0 wins with less information only";
      return c;
    });
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hierarchy",   "multiply",  "cleanup",        "robber-normal-forms",
                                              "two-tree",    "tree-family", "symmetric",    "knowledge-lift", "imperfect"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyParams& p) {
  if (name == "hierarchy") return verify_hierarchy(p);
  if (name == "multiply") return verify_multiply(p);
  if (name == "cleanup") return verify_cleanup(p);
  if (name == "robber-normal-forms") return verify_robber_normal_forms(p);
  if (name == "two-tree") return verify_two_tree(p);
  if (name == "tree-family") return verify_hierarchy_trees(p);
  if (name == "symmetric") return verify_symmetric(p);
  if (name == "knowledge-lift") return verify_knowledge_lift(p);
  if (name == "imperfect") return verify_imperfect(p);
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace pw
