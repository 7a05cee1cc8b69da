#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "errors.hpp"
#include "strategy.hpp"

namespace pw {

// Turn-based parity game with action-labelled moves. Player 0 picks an
// action at its positions; the successor under that action is resolved by
// player 1. Player 1 picks any successor. The least color seen infinitely
// often decides: even wins for player 0.
struct ParityMove {
  int from, action, to;
  friend auto operator<=>(const ParityMove&, const ParityMove&) = default;
};

struct ParityGame {
  std::vector<std::string> actions;
  std::vector<int> color;
  std::vector<int> owner;
  std::vector<ParityMove> moves;
  int init = 0;

  int size() const { return static_cast<int>(color.size()); }
  int action_index(const std::string& a) const {
    auto it = std::find(actions.begin(), actions.end(), a);
    return it == actions.end() ? -1 : static_cast<int>(it - actions.begin());
  }
  VertexSet post(int u, int a) const {
    VertexSet out;
    for (const auto& m : moves)
      if (m.from == u && m.action == a) out.insert(m.to);
    return out;
  }
  VertexSet post(int u) const {
    VertexSet out;
    for (const auto& m : moves)
      if (m.from == u) out.insert(m.to);
    return out;
  }
  VertexSet post(VertexSet us, int a) const {
    VertexSet out;
    for (const auto& m : moves)
      if (us.contains(m.from) && m.action == a) out.insert(m.to);
    return out;
  }
  VertexSet post(VertexSet us) const {
    VertexSet out;
    for (const auto& m : moves)
      if (us.contains(m.from)) out.insert(m.to);
    return out;
  }
  // Actions with at least one move from u.
  std::vector<int> enabled(int u) const {
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(actions.size()); ++a)
      if (!post(u, a).empty()) out.push_back(a);
    return out;
  }
};

// The arena graph (V, union of all move relations).
inline Digraph arena_graph(const ParityGame& pg) {
  std::vector<Edge> es;
  for (const auto& m : pg.moves) es.emplace_back(m.from, m.to);
  return Digraph(pg.size(), es);
}

// Partition of the positions into classes player 0 cannot tell apart.
struct ObservationEquiv {
  std::vector<int> class_of;

  static ObservationEquiv identity(int n) {
    ObservationEquiv eq;
    for (int v = 0; v < n; ++v) eq.class_of.push_back(v);
    return eq;
  }
  VertexSet members(int v) const {
    VertexSet out;
    for (int u = 0; u < static_cast<int>(class_of.size()); ++u)
      if (class_of[u] == class_of[v]) out.insert(u);
    return out;
  }
  std::vector<VertexSet> classes() const {
    std::map<int, VertexSet> by;
    for (int u = 0; u < static_cast<int>(class_of.size()); ++u) by[class_of[u]].insert(u);
    std::vector<VertexSet> out;
    for (auto& [c, s] : by) out.push_back(s);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
    return out;
  }
  int max_class_size() const {
    int m = 0;
    for (VertexSet c : classes()) m = std::max(m, c.size());
    return m;
  }
  // Splits a set of positions along the classes.
  std::vector<VertexSet> split(VertexSet s) const {
    std::vector<VertexSet> out;
    for (VertexSet c : classes())
      if (VertexSet part = s & c; !part.empty()) out.push_back(part);
    return out;
  }
};

// Empty when the game and observation classes are well-formed.
inline std::vector<std::string> validate(const ParityGame& pg, const ObservationEquiv& eq) {
  std::vector<std::string> out;
  const int n = pg.size();
  if (n == 0) out.push_back("game has no positions");
  if (n > VertexSet::kMaxVertices) out.push_back("more than 64 positions");
  if (static_cast<int>(pg.owner.size()) != n) out.push_back("owner list does not match positions");
  if (static_cast<int>(eq.class_of.size()) != n) out.push_back("observation classes do not cover the positions");
  if (!out.empty()) return out;
  if (pg.init < 0 || pg.init >= n) out.push_back("initial position " + std::to_string(pg.init) + " out of range");
  for (int v = 0; v < n; ++v) {
    if (pg.color[v] < 0) out.push_back("position " + std::to_string(v) + " has a negative color");
    if (pg.owner[v] != 0 && pg.owner[v] != 1) out.push_back("position " + std::to_string(v) + " has owner not 0/1");
    if (pg.post(v).empty())
      out.push_back("position " + std::to_string(v) + " is a dead end (add a self-loop with a losing color)");
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (eq.class_of[u] != eq.class_of[v]) continue;
      const std::string pair = std::to_string(u) + " and " + std::to_string(v);
      if (pg.color[u] != pg.color[v]) out.push_back("observed positions " + pair + " have different colors");
      if (pg.owner[u] != pg.owner[v]) out.push_back("observed positions " + pair + " have different owners");
      else if (pg.owner[u] == 0 && pg.enabled(u) != pg.enabled(v))
        out.push_back("observed positions " + pair + " enable different actions");
    }
  return out;
}

inline void require_valid(const ParityGame& pg, const ObservationEquiv& eq) {
  std::vector<std::string> errs = validate(pg, eq);
  if (!errs.empty()) throw PreconditionError("invalid game: " + errs.front());
}

// ---------------------------------------------------------------------------
// Knowledge-set construction

struct KnowledgeGame {
  ParityGame game;               // positions are knowledge sets
  std::vector<VertexSet> sets;   // knowledge set of each position
};

// Player 0 at knowledge K choosing action a reaches each class-part of
// post_a(K); at player 1's knowledge sets the parts of the full post set are
// the successors. Only sets reachable from {init} are built.
inline KnowledgeGame powerset_construct(const ParityGame& pg, const ObservationEquiv& eq) {
  require_valid(pg, eq);
  KnowledgeGame kg;
  kg.game.actions = pg.actions;
  std::map<std::uint64_t, int> index;
  auto node = [&](VertexSet k) {
    auto [it, fresh] = index.emplace(k.bits(), static_cast<int>(kg.sets.size()));
    if (fresh) {
      if (kg.sets.size() >= static_cast<std::size_t>(VertexSet::kMaxVertices))
        throw ResourceError("knowledge game exceeds 64 positions", VertexSet::kMaxVertices);
      kg.sets.push_back(k);
      kg.game.color.push_back(pg.color[k.front()]);
      kg.game.owner.push_back(pg.owner[k.front()]);
    }
    return it->second;
  };
  kg.game.init = node(VertexSet::single(pg.init));
  std::set<ParityMove> moves;
  for (std::size_t i = 0; i < kg.sets.size(); ++i) {
    const VertexSet k = kg.sets[i];
    const int from = static_cast<int>(i);
    for (int a = 0; a < static_cast<int>(pg.actions.size()); ++a) {
      if (pg.owner[k.front()] == 0) {
        for (VertexSet part : eq.split(pg.post(k, a))) moves.insert({from, a, node(part)});
      } else {
        for (VertexSet part : eq.split(pg.post(k)))
          if (pg.post(k, a).intersects(part)) moves.insert({from, a, node(part)});
      }
    }
  }
  kg.game.moves.assign(moves.begin(), moves.end());
  return kg;
}

// ---------------------------------------------------------------------------
// Explicit two-player arena and Zielonka's algorithm

// Player 0 positions v get one intermediate node (v, a) per enabled action,
// owned by player 1 and colored like v.
struct ExpandedArena {
  int n = 0;                      // original positions are 0..n-1
  std::vector<int> owner, color;
  std::vector<std::vector<int>> succ, pred;
  std::vector<std::pair<int, int>> choice;  // (v, a) for intermediate nodes, (-1,-1) otherwise

  int size() const { return static_cast<int>(owner.size()); }
};

inline ExpandedArena expand(const ParityGame& pg) {
  ExpandedArena ar;
  ar.n = pg.size();
  for (int v = 0; v < ar.n; ++v) {
    ar.owner.push_back(pg.owner[v]);
    ar.color.push_back(pg.color[v]);
    ar.choice.push_back({-1, -1});
  }
  ar.succ.resize(ar.n);
  for (int v = 0; v < ar.n; ++v) {
    if (pg.owner[v] == 0) {
      for (int a : pg.enabled(v)) {
        int mid = ar.size();
        ar.owner.push_back(1);
        ar.color.push_back(pg.color[v]);
        ar.choice.push_back({v, a});
        ar.succ.push_back({});
        ar.succ[v].push_back(mid);
        for (Vertex w : pg.post(v, a)) ar.succ[mid].push_back(w);
      }
    } else {
      for (Vertex w : pg.post(v)) ar.succ[v].push_back(w);
    }
  }
  ar.pred.assign(ar.size(), {});
  for (int u = 0; u < ar.size(); ++u)
    for (int w : ar.succ[u]) ar.pred[w].push_back(u);
  return ar;
}

struct ParitySolution {
  std::vector<bool> win0;  // over expanded arena nodes
  std::vector<int> strategy;  // chosen successor at the owner's winning nodes, -1 elsewhere
};

namespace detail {

// Attractor of `target` for `player` inside `sub`; records attractor moves.
inline std::vector<bool> attractor(const ExpandedArena& ar, const std::vector<bool>& sub,
                                   const std::vector<bool>& target, int player, std::vector<int>& strat) {
  std::vector<bool> in(ar.size(), false);
  std::vector<int> count(ar.size(), 0);
  std::vector<int> queue;
  for (int v = 0; v < ar.size(); ++v) {
    if (!sub[v]) continue;
    for (int w : ar.succ[v])
      if (sub[w]) ++count[v];
    if (target[v]) {
      in[v] = true;
      queue.push_back(v);
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int w = queue[h];
    for (int v : ar.pred[w]) {
      if (!sub[v] || in[v]) continue;
      if (ar.owner[v] == player) {
        in[v] = true;
        strat[v] = w;
        queue.push_back(v);
      } else if (--count[v] == 0) {
        in[v] = true;
        queue.push_back(v);
      }
    }
  }
  return in;
}

inline void zielonka(const ExpandedArena& ar, const std::vector<bool>& sub, std::vector<bool>& win0,
                     std::vector<int>& strat) {
  int low = -1;
  for (int v = 0; v < ar.size(); ++v)
    if (sub[v] && (low < 0 || ar.color[v] < low)) low = ar.color[v];
  if (low < 0) return;
  const int player = low % 2;
  std::vector<bool> top(ar.size(), false);
  for (int v = 0; v < ar.size(); ++v) top[v] = sub[v] && ar.color[v] == low;
  std::vector<int> s1 = strat;
  std::vector<bool> a = attractor(ar, sub, top, player, s1);
  std::vector<bool> rest(ar.size());
  for (int v = 0; v < ar.size(); ++v) rest[v] = sub[v] && !a[v];
  std::vector<bool> w_rest(ar.size(), false);
  std::vector<int> s_rest = strat;
  zielonka(ar, rest, w_rest, s_rest);

  bool opponent_wins_somewhere = false;
  for (int v = 0; v < ar.size(); ++v)
    if (rest[v] && w_rest[v] != (player == 0)) opponent_wins_somewhere = true;

  if (!opponent_wins_somewhere) {
    for (int v = 0; v < ar.size(); ++v) {
      if (!sub[v]) continue;
      win0[v] = player == 0;
      if (ar.owner[v] != player) continue;
      if (rest[v]) strat[v] = s_rest[v];
      else if (top[v]) {
        for (int w : ar.succ[v])
          if (sub[w]) {
            strat[v] = w;
            break;
          }
      } else strat[v] = s1[v];
    }
    return;
  }
  std::vector<bool> opp(ar.size(), false);
  for (int v = 0; v < ar.size(); ++v) opp[v] = rest[v] && w_rest[v] != (player == 0);
  std::vector<int> s2 = strat;
  std::vector<bool> b = attractor(ar, sub, opp, 1 - player, s2);
  std::vector<bool> remain(ar.size());
  for (int v = 0; v < ar.size(); ++v) remain[v] = sub[v] && !b[v];
  std::vector<bool> w_remain(ar.size(), false);
  std::vector<int> s_remain = strat;
  zielonka(ar, remain, w_remain, s_remain);
  for (int v = 0; v < ar.size(); ++v) {
    if (!sub[v]) continue;
    if (b[v]) {
      win0[v] = player == 1;
      if (ar.owner[v] == 1 - player) strat[v] = opp[v] ? s_rest[v] : s2[v];
    } else {
      win0[v] = w_remain[v];
      strat[v] = s_remain[v];
    }
  }
}

}  // namespace detail

inline ParitySolution zielonka_solve(const ExpandedArena& ar) {
  ParitySolution sol;
  sol.win0.assign(ar.size(), false);
  sol.strategy.assign(ar.size(), -1);
  detail::zielonka(ar, std::vector<bool>(ar.size(), true), sol.win0, sol.strategy);
  for (int v = 0; v < ar.size(); ++v) {
    bool mine = sol.win0[v] == (ar.owner[v] == 0);
    if (!mine || ar.succ[v].size() == 1) sol.strategy[v] = mine ? ar.succ[v][0] : -1;
  }
  return sol;
}

struct GameSolution {
  ExpandedArena arena;
  ParitySolution raw;
  std::vector<bool> win0;  // original positions only
  std::vector<int> action;  // player 0's action at its winning positions, -1 elsewhere
  std::vector<int> move1;   // player 1's successor at its winning positions, -1 elsewhere
  bool player0_wins_init = false;
};

inline GameSolution zielonka_solve(const ParityGame& pg) {
  GameSolution out;
  out.arena = expand(pg);
  out.raw = zielonka_solve(out.arena);
  for (int v = 0; v < pg.size(); ++v) {
    out.win0.push_back(out.raw.win0[v]);
    int s = out.raw.strategy[v];
    out.action.push_back(pg.owner[v] == 0 && out.raw.win0[v] && s >= 0 ? out.arena.choice[s].second : -1);
    out.move1.push_back(pg.owner[v] == 1 && !out.raw.win0[v] ? s : -1);
  }
  out.player0_wins_init = out.win0[pg.init];
  return out;
}

// ---------------------------------------------------------------------------
// One-player residual checks

// Graph with integer nodes, colors and successor lists. Returns true if some
// cycle reachable from `start` has a least color of the given parity.
inline bool reaches_cycle_with_parity(const std::vector<std::vector<int>>& succ, const std::vector<int>& color,
                                      const std::vector<int>& start, int parity) {
  const int n = static_cast<int>(succ.size());
  std::vector<bool> seen(n, false);
  std::vector<int> order(start.begin(), start.end());
  for (int s : start) seen[s] = true;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int w : succ[order[h]])
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
  for (int c : std::set<int>(color.begin(), color.end())) {
    if (c % 2 != parity) continue;
    // A node of color c lying on a cycle through nodes of color >= c.
    for (int v : order) {
      if (color[v] != c) continue;
      std::vector<bool> mark(n, false);
      std::vector<int> stack{v};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : succ[u]) {
          if (!seen[w] || color[w] < c) continue;
          if (w == v) return true;
          if (!mark[w]) {
            mark[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
  }
  return false;
}

// Fixes `player`'s strategy on the arena and checks that from every node of
// `region` the opponent can neither leave the region nor reach a cycle the
// player loses.
inline std::string residual_error(const ExpandedArena& ar, const std::vector<int>& strategy,
                                  const std::vector<bool>& region, int player) {
  std::vector<std::vector<int>> succ(ar.size());
  std::vector<int> start;
  for (int v = 0; v < ar.size(); ++v) {
    if (ar.owner[v] == player) {
      if (region[v] && strategy[v] < 0) return "no strategy move at node " + std::to_string(v);
      if (strategy[v] >= 0) succ[v] = {strategy[v]};
      else succ[v] = ar.succ[v];
    } else {
      succ[v] = ar.succ[v];
    }
    if (region[v]) start.push_back(v);
  }
  for (int v = 0; v < ar.size(); ++v)
    if (region[v])
      for (int w : succ[v])
        if (!region[w]) return "play leaves the winning region at node " + std::to_string(v);
  if (reaches_cycle_with_parity(succ, ar.color, start, 1 - player)) return "opponent reaches a losing cycle";
  return "";
}

// Both strategies of a solution checked on their regions.
inline std::string solution_error(const ExpandedArena& ar, const ParitySolution& sol) {
  std::vector<bool> r1(ar.size());
  for (int v = 0; v < ar.size(); ++v) r1[v] = !sol.win0[v];
  if (std::string e = residual_error(ar, sol.strategy, sol.win0, 0); !e.empty()) return "player 0: " + e;
  if (std::string e = residual_error(ar, sol.strategy, r1, 1); !e.empty()) return "player 1: " + e;
  return "";
}

// ---------------------------------------------------------------------------
// Imperfect information

struct ImperfectResult {
  bool player0_wins = false;
  KnowledgeGame knowledge;
  // Observation-based strategy: action per knowledge set (player 0 sets in
  // the winning region).
  std::map<std::uint64_t, int> strategy;
  std::string verification;  // empty when the strategy checks out in the original game
};

// Plays the knowledge-set strategy in the original game: states are
// (position, knowledge) pairs; player 1 must not reach an odd cycle.
inline std::string verify_observation_strategy(const ParityGame& pg, const ObservationEquiv& eq,
                                               const std::map<std::uint64_t, int>& strategy) {
  std::map<std::pair<int, std::uint64_t>, int> index;
  std::vector<std::pair<int, VertexSet>> states;
  std::vector<std::vector<int>> succ;
  std::vector<int> color;
  auto node = [&](int v, VertexSet k) {
    auto [it, fresh] = index.emplace(std::make_pair(v, k.bits()), static_cast<int>(states.size()));
    if (fresh) {
      states.push_back({v, k});
      succ.push_back({});
      color.push_back(pg.color[v]);
    }
    return it->second;
  };
  node(pg.init, VertexSet::single(pg.init));
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [v, k] = states[i];
    std::vector<int> next;
    if (pg.owner[v] == 0) {
      auto it = strategy.find(k.bits());
      if (it == strategy.end()) return "strategy undefined at knowledge " + to_string(k);
      VertexSet all = pg.post(k, it->second);
      VertexSet here = pg.post(v, it->second);
      if (here.empty()) return "action unavailable at position " + std::to_string(v);
      for (Vertex w : here) next.push_back(node(w, all & eq.members(w)));
    } else {
      VertexSet all = pg.post(k);
      for (Vertex w : pg.post(v)) next.push_back(node(w, all & eq.members(w)));
    }
    succ[i] = next;
  }
  if (reaches_cycle_with_parity(succ, color, {0}, 1)) return "player 1 reaches a cycle with odd least color";
  return "";
}

inline ImperfectResult solve_imperfect(const ParityGame& pg, const ObservationEquiv& eq) {
  ImperfectResult res;
  res.knowledge = powerset_construct(pg, eq);
  GameSolution sol = zielonka_solve(res.knowledge.game);
  res.player0_wins = sol.player0_wins_init;
  if (res.player0_wins) {
    for (int i = 0; i < res.knowledge.game.size(); ++i)
      if (sol.action[i] >= 0) res.strategy[res.knowledge.sets[i].bits()] = sol.action[i];
    res.verification = verify_observation_strategy(pg, eq, res.strategy);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Lifting a cop strategy to the knowledge graph

// Plays f (against |K| robbers on the arena graph g of the original game)
// alongside a single robber on the knowledge graph: a robber on knowledge
// set K corresponds to robbers on the members of K, and the cops occupy
// every knowledge set meeting f's cop set.
class KnowledgeLiftAgent : public CopAgent {
 public:
  KnowledgeLiftAgent(std::shared_ptr<const Digraph> g, std::shared_ptr<const std::vector<VertexSet>> sets,
                     std::unique_ptr<CopAgent> inner)
      : g_(std::move(g)), sets_(std::move(sets)), inner_(std::move(inner)) {}
  KnowledgeLiftAgent(const KnowledgeLiftAgent& o)
      : g_(o.g_), sets_(o.sets_), inner_(o.inner_->clone()), started_(o.started_), cops_(o.cops_),
        announced_(o.announced_), robbers_(o.robbers_) {}

  VertexSet announce(const CopTurn& pos) override {
    const VertexSet robbers = sets_->at(pos.robbers.front());
    if (started_) {
      RobberTurn mv{cops_, announced_, robbers_};
      if (robbers.intersects(announced_) || !robbers.subset_of(robber_reach(*g_, mv)))
        throw InvariantViolation("knowledge-lift", "robber move " + to_string(robbers_) + " -> " +
                                                       to_string(robbers) + " is illegal in the original game");
      cops_ = announced_;
    }
    started_ = true;
    robbers_ = robbers;
    announced_ = inner_->announce({cops_, robbers});
    VertexSet lifted;
    for (int i = 0; i < static_cast<int>(sets_->size()); ++i)
      if ((*sets_)[i].intersects(announced_)) lifted.insert(i);
    return lifted;
  }
  std::unique_ptr<CopAgent> clone() const override { return std::make_unique<KnowledgeLiftAgent>(*this); }
  std::string memory_key() const override {
    return std::to_string(cops_.bits()) + "/" + std::to_string(announced_.bits()) + "/" +
           std::to_string(robbers_.bits()) + ";" + inner_->memory_key();
  }

 private:
  std::shared_ptr<const Digraph> g_;
  std::shared_ptr<const std::vector<VertexSet>> sets_;
  std::unique_ptr<CopAgent> inner_;
  bool started_ = false;
  VertexSet cops_, announced_, robbers_;
};

class KnowledgeLiftProto : public CopAgent {
 public:
  KnowledgeLiftProto(Digraph g, std::vector<VertexSet> sets, CopStrategy inner)
      : g_(std::make_shared<const Digraph>(std::move(g))),
        sets_(std::make_shared<const std::vector<VertexSet>>(std::move(sets))), inner_(std::move(inner)) {}
  VertexSet announce(const CopTurn&) override { throw std::logic_error("prototype agent"); }
  std::unique_ptr<CopAgent> clone() const override {
    return std::make_unique<KnowledgeLiftAgent>(g_, sets_, inner_.start());
  }

 private:
  std::shared_ptr<const Digraph> g_;
  std::shared_ptr<const std::vector<VertexSet>> sets_;
  CopStrategy inner_;
};

// Cop strategy on the knowledge graph from a cop strategy f for r robbers on
// the original arena graph g. Cop bound k * 2^(r-1) with r the largest
// class size.
inline CopStrategy lift_cop_strategy(const Digraph& g, const CopStrategy& f, const KnowledgeGame& kg, int r) {
  for (VertexSet k : kg.sets) {
    g.check_set(k);
    if (k.size() > r) throw PreconditionError("knowledge set " + to_string(k) + " larger than the robber count");
  }
  const int bound = f.cops() * (1 << (r - 1));
  return CopStrategy(std::make_shared<KnowledgeLiftProto>(g, kg.sets, f), bound, "knowledge-lift");
}

// ---------------------------------------------------------------------------
// Lemma-style path lifting check

// Every knowledge-game history up to `max_len` positions (from the initial
// set) and every member of its last set extend back to a history of the
// original game through the sets. Returns the first counterexample.
inline std::string history_lifting_error(const ParityGame& pg, const KnowledgeGame& kg, int max_len) {
  const Digraph kgraph = arena_graph(kg.game);
  const Digraph graph = arena_graph(pg);
  std::vector<int> hist{kg.game.init};
  std::string err;
  auto check = [&]() {
    for (Vertex v : kg.sets[hist.back()]) {
      VertexSet back = VertexSet::single(v);
      for (int i = static_cast<int>(hist.size()) - 2; i >= 0; --i) {
        VertexSet prev;
        for (Vertex u : kg.sets[hist[i]])
          if (graph.out(u).intersects(back)) prev.insert(u);
        back = prev;
      }
      if (back.empty() || !back.contains(pg.init)) {
        std::string h;
        for (int x : hist) h += " " + to_string(kg.sets[x]);
        return "no original history ending in " + std::to_string(v) + " along" + h;
      }
    }
    return std::string();
  };
  auto walk = [&](auto&& self) -> bool {
    err = check();
    if (!err.empty()) return false;
    if (static_cast<int>(hist.size()) >= max_len) return true;
    for (Vertex w : kgraph.out(hist.back())) {
      hist.push_back(w);
      if (!self(self)) return false;
      hist.pop_back();
    }
    return true;
  };
  walk(walk);
  return err;
}

// ---------------------------------------------------------------------------
// Random instances

struct RandomGameParams {
  int positions = 6;
  int max_class = 2;
  int colors = 3;
  int actions = 2;
};

// Observable colors, class-homogeneous owners and enabled actions, no dead
// ends. Classes are formed by pairing shuffled positions.
inline std::pair<ParityGame, ObservationEquiv> random_parity_game(const RandomGameParams& p, std::uint64_t seed) {
  if (p.positions < 1 || p.positions > VertexSet::kMaxVertices) throw ConfigError("positions out of range");
  std::mt19937_64 rng(seed);
  auto below = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  ParityGame pg;
  for (int a = 0; a < p.actions; ++a) pg.actions.push_back(std::string(1, static_cast<char>('a' + a)));
  std::vector<int> perm(p.positions);
  for (int i = 0; i < p.positions; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  ObservationEquiv eq;
  eq.class_of.assign(p.positions, -1);
  int next_class = 0;
  for (std::size_t i = 0; i < perm.size();) {
    int size = 1 + below(p.max_class);
    for (int j = 0; j < size && i < perm.size(); ++j, ++i) eq.class_of[perm[i]] = next_class;
    ++next_class;
  }
  std::vector<int> cls_color(next_class), cls_owner(next_class);
  std::vector<std::vector<int>> cls_actions(next_class);
  for (int c = 0; c < next_class; ++c) {
    cls_color[c] = below(p.colors);
    cls_owner[c] = below(2);
    for (int a = 0; a < p.actions; ++a)
      if (below(3) != 0) cls_actions[c].push_back(a);
    if (cls_actions[c].empty()) cls_actions[c].push_back(below(p.actions));
  }
  std::set<ParityMove> moves;
  for (int v = 0; v < p.positions; ++v) {
    int c = eq.class_of[v];
    pg.color.push_back(cls_color[c]);
    pg.owner.push_back(cls_owner[c]);
    if (cls_owner[c] == 0) {
      for (int a : cls_actions[c]) {
        int targets = 1 + below(2);
        for (int t = 0; t < targets; ++t) moves.insert({v, a, below(p.positions)});
      }
    } else {
      int targets = 1 + below(2);
      for (int t = 0; t < targets; ++t) moves.insert({v, below(p.actions), below(p.positions)});
    }
  }
  pg.moves.assign(moves.begin(), moves.end());
  pg.init = 0;
  return {pg, eq};
}

// Player 1 picks one of two positions player 0 cannot tell apart; each
// needs a different action to avoid the losing sink.
inline std::pair<ParityGame, ObservationEquiv> uncertainty_example() {
  ParityGame pg;
  pg.actions = {"a", "b"};
  pg.color = {0, 0, 0, 1};
  pg.owner = {1, 0, 0, 1};
  pg.moves = {{0, 0, 1}, {0, 0, 2}, {1, 0, 0}, {1, 1, 3}, {2, 0, 3}, {2, 1, 0}, {3, 0, 3}};
  pg.init = 0;
  ObservationEquiv eq;
  eq.class_of = {0, 1, 1, 2};
  return {pg, eq};
}

// ---------------------------------------------------------------------------
// Text formats

inline ParityGame parse_parity_game(const std::string& text) {
  ParityGame pg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1;
  bool have_init = false;
  std::vector<bool> defined;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
  auto read_int = [&](std::istringstream& ss, const char* what) {
    long long x;
    if (!(ss >> x)) fail(std::string("expected ") + what);
    return x;
  };
  auto position = [&](std::istringstream& ss) {
    long long v = read_int(ss, "position id");
    if (v < 0 || v >= n) fail("position " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "positions") {
      if (n >= 0) fail("duplicate header");
      long long count = read_int(ss, "position count");
      if (count < 1 || count > VertexSet::kMaxVertices) fail("position count must be 1..64");
      n = static_cast<int>(count);
      std::string word;
      if (!(ss >> word) || word != "actions") fail("expected 'actions' after the position count");
      for (std::string a; ss >> a;) {
        if (pg.action_index(a) >= 0) fail("duplicate action '" + a + "'");
        pg.actions.push_back(a);
      }
      if (pg.actions.empty()) fail("no actions declared");
      pg.color.assign(n, 0);
      pg.owner.assign(n, 0);
      defined.assign(n, false);
      continue;
    }
    if (n < 0) fail("missing 'positions <n> actions ...' header");
    if (head == "move") {
      int u = position(ss);
      std::string a;
      if (!(ss >> a)) fail("expected action");
      int ai = pg.action_index(a);
      if (ai < 0) fail("unknown action '" + a + "'");
      int v = position(ss);
      pg.moves.push_back({u, ai, v});
    } else if (head == "init") {
      if (have_init) fail("duplicate init");
      pg.init = position(ss);
      have_init = true;
    } else {
      std::istringstream id(head);
      long long v;
      if (!(id >> v) || !id.eof()) fail("unknown directive '" + head + "'");
      if (v < 0 || v >= n) fail("position " + std::to_string(v) + " out of range");
      long long c = read_int(ss, "color"), o = read_int(ss, "owner");
      if (c < 0) fail("negative color");
      if (o != 0 && o != 1) fail("owner must be 0 or 1");
      if (defined[v]) fail("position " + std::to_string(v) + " defined twice");
      defined[v] = true;
      pg.color[v] = static_cast<int>(c);
      pg.owner[v] = static_cast<int>(o);
    }
    std::string extra;
    if (ss >> extra) fail("unexpected '" + extra + "'");
  }
  if (n < 0) throw InputError("empty parity game file");
  for (int v = 0; v < n; ++v)
    if (!defined[v]) throw InputError("position " + std::to_string(v) + " has no color/owner line");
  if (!have_init) throw InputError("missing init line");
  std::sort(pg.moves.begin(), pg.moves.end());
  pg.moves.erase(std::unique(pg.moves.begin(), pg.moves.end()), pg.moves.end());
  return pg;
}

inline std::string emit_parity_game(const ParityGame& pg) {
  std::string out = "positions " + std::to_string(pg.size()) + " actions";
  for (const auto& a : pg.actions) out += " " + a;
  out += "\n";
  for (int v = 0; v < pg.size(); ++v)
    out += std::to_string(v) + " " + std::to_string(pg.color[v]) + " " + std::to_string(pg.owner[v]) + "\n";
  std::vector<ParityMove> ms = pg.moves;
  std::sort(ms.begin(), ms.end());
  for (const auto& m : ms)
    out += "move " + std::to_string(m.from) + " " + pg.actions[m.action] + " " + std::to_string(m.to) + "\n";
  return out + "init " + std::to_string(pg.init) + "\n";
}

inline ObservationEquiv parse_observations(const std::string& text, int n) {
  ObservationEquiv eq = ObservationEquiv::identity(n);
  std::vector<bool> listed(n, false);
  std::istringstream in(text);
  std::string line;
  int lineno = 0, next_class = n;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<int> members;
    for (std::string tok; ss >> tok;) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || v >= n)
        throw InputError("line " + std::to_string(lineno) + ": bad position '" + tok + "'");
      if (listed[v]) throw InputError("line " + std::to_string(lineno) + ": position " + tok + " listed twice");
      listed[v] = true;
      members.push_back(static_cast<int>(v));
    }
    if (members.empty()) continue;
    for (int v : members) eq.class_of[v] = next_class;
    ++next_class;
  }
  return eq;
}

inline std::string emit_observations(const ObservationEquiv& eq) {
  std::string out;
  for (VertexSet c : eq.classes())
    if (c.size() > 1) out += join(c, " ") + "\n";
  return out;
}

}  // namespace pw
