#pragma once

#include <climits>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "digraph.hpp"
#include "errors.hpp"
#include "vertex_set.hpp"

namespace pw {

struct InitialPosition {
  friend bool operator==(InitialPosition, InitialPosition) { return true; }
};

// Cops sit on `cops`, it is the cops' turn to announce.
struct CopTurn {
  VertexSet cops;
  VertexSet robbers;
  friend bool operator==(const CopTurn&, const CopTurn&) = default;
};

// Cops on `cops` announced a move to `announced`; robbers answer.
struct RobberTurn {
  VertexSet cops;
  VertexSet announced;
  VertexSet robbers;
  friend bool operator==(const RobberTurn&, const RobberTurn&) = default;
};

using SearchPosition = std::variant<InitialPosition, CopTurn, RobberTurn>;

inline std::string to_string(const CopTurn& p) {
  return "(" + to_string(p.cops) + "," + to_string(p.robbers) + ")";
}
inline std::string to_string(const RobberTurn& p) {
  return "(" + to_string(p.cops) + "," + to_string(p.announced) + "," + to_string(p.robbers) + ")";
}
inline std::string to_string(const SearchPosition& p) {
  if (std::holds_alternative<InitialPosition>(p)) return "init";
  if (auto* c = std::get_if<CopTurn>(&p)) return to_string(*c);
  return to_string(std::get<RobberTurn>(p));
}

inline constexpr std::size_t kDefaultBudget = 10'000'000;

// Position budget from PURSUITWIDTH_BUDGET, else the default.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("PURSUITWIDTH_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

// How the SCC restriction constrains an announcement U' at (U, v).
enum class SccRule {
  // U' must lie inside the SCC of G - U containing the robber, so every
  // cop currently on the graph has to leave.
  Literal,
  // Only newly placed cops (U' \ U) must lie inside that SCC.
  NewPlacements,
};

struct SearchConfig {
  int k = 1;
  int r = 1;
  bool visible = true;
  bool restrict_to_scc = false;
  SccRule scc_rule = SccRule::Literal;
  std::size_t budget = default_budget();
  // Only consider announcements inside U plus the robbers' current reach.
  // Placements outside that region can never touch a robber again.
  bool prune_unreachable = true;

  void validate() const {
    if (k < 0) throw ConfigError("k must be >= 0");
    if (r < 1) throw ConfigError("r must be >= 1");
    if (restrict_to_scc && r > 1)
      throw ConfigError("SCC restriction is only defined for a single robber");
  }
};

// Robber reach when moving out of `pos`: Reach_{G - (U cap U')}(R).
inline VertexSet robber_reach(const Digraph& g, const RobberTurn& pos) {
  return reach_excluding(g, pos.cops & pos.announced, pos.robbers);
}

// No cop is lifted from a vertex the robbers can still reach.
inline bool is_monotone_move(const Digraph& g, const RobberTurn& pos) {
  return !(pos.cops - pos.announced).intersects(robber_reach(g, pos));
}

// Vertices an announcement may use at `pos` under the configuration.
inline VertexSet announcement_region(const Digraph& g, const SearchConfig& cfg, const CopTurn& pos) {
  if (cfg.restrict_to_scc) {
    if (pos.robbers.size() != 1)
      throw ConfigError("SCC restriction needs exactly one robber on the graph");
    VertexSet comp = scc_of(g, pos.cops, pos.robbers.front());
    return cfg.scc_rule == SccRule::Literal ? comp : (comp | pos.cops);
  }
  return g.vertices();
}

inline std::vector<RobberTurn> cop_moves(const Digraph& g, const SearchConfig& cfg, const CopTurn& pos) {
  cfg.validate();
  g.check_set(pos.cops);
  g.check_set(pos.robbers);
  std::vector<RobberTurn> out;
  for_each_subset_up_to(announcement_region(g, cfg, pos), cfg.k, [&](VertexSet next) {
    out.push_back({pos.cops, next, pos.robbers});
  });
  return out;
}

// Robber answers from `pos`, including shrinking and leaving entirely.
inline std::vector<CopTurn> robber_moves(const Digraph& g, const SearchConfig& cfg, const RobberTurn& pos) {
  std::vector<CopTurn> out;
  VertexSet avail = robber_reach(g, pos) - pos.announced;
  for_each_subset_up_to(avail, cfg.r, [&](VertexSet next) {
    out.push_back({pos.announced, next});
  });
  return out;
}

// Opening robber placements (nonempty).
inline std::vector<CopTurn> initial_moves(const Digraph& g, const SearchConfig& cfg) {
  std::vector<CopTurn> out;
  for_each_subset_up_to(g.vertices(), cfg.r, [&](VertexSet rs) {
    if (!rs.empty()) out.push_back({VertexSet{}, rs});
  });
  return out;
}

enum class Winner { Cops, Robbers };

inline const char* to_string(Winner w) { return w == Winner::Cops ? "cops" : "robbers"; }

}  // namespace pw

template <>
struct std::hash<pw::CopTurn> {
  std::size_t operator()(const pw::CopTurn& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.cops.bits() * 0x9E3779B97F4A7C15ULL ^ p.robbers.bits());
  }
};

template <>
struct std::hash<pw::RobberTurn> {
  std::size_t operator()(const pw::RobberTurn& p) const noexcept {
    std::uint64_t h = p.cops.bits() * 0x9E3779B97F4A7C15ULL ^ p.announced.bits();
    return std::hash<std::uint64_t>{}(h * 0xC2B2AE3D27D4EB4FULL ^ p.robbers.bits());
  }
};

namespace pw {

// Exhaustive solution of the visible-robber game for one (k, r).
// A cop position (U, R) gets rank t when the cops can announce a monotone
// U' after which every robber answer has rank < t (rank 0: no robbers).
// The cop-winning set is closed under shrinking R, so only maximal robber
// answers need to be inspected.
class SolvedArena {
 public:
  static constexpr int kLost = INT_MAX;

  SolvedArena(const Digraph& g, const SearchConfig& cfg) : g_(g), cfg_(cfg) {
    cfg.validate();
    if (!cfg.visible) throw ConfigError("solve_search needs visible robbers");
    for_each_subset_up_to(g.vertices(), cfg.k, [&](VertexSet s) {
      u_index_.emplace(s.bits(), static_cast<int>(us_.size()));
      us_.push_back(s);
    });
    for_each_subset_up_to(g.vertices(), cfg.r, [&](VertexSet s) {
      if (s.empty()) return;
      r_index_.emplace(s.bits(), static_cast<int>(rs_.size()));
      rs_.push_back(s);
    });
    const std::size_t total = us_.size() * rs_.size();
    if (total > cfg.budget)
      throw ResourceError("arena has " + std::to_string(total) + " cop positions, budget " +
                              std::to_string(cfg.budget),
                          cfg.budget, cfg.k);
    rank_.assign(total, kLost);
    witness_.assign(total, VertexSet{});
    solve();
  }

  const Digraph& graph() const { return g_; }
  const SearchConfig& config() const { return cfg_; }
  std::size_t size() const { return rank_.size(); }

  int rank(const CopTurn& p) const {
    if (p.robbers.empty()) return 0;
    if (p.cops.intersects(p.robbers)) return kLost;
    auto ui = u_index_.find(p.cops.bits());
    auto ri = r_index_.find(p.robbers.bits());
    if (ui == u_index_.end() || ri == r_index_.end()) return kLost;
    return rank_[slot(ui->second, ri->second)];
  }
  bool cops_win(const CopTurn& p) const { return rank(p) != kLost; }

  // Cops win from the initial position: every opening placement is winning.
  bool cops_win() const {
    for (const CopTurn& p : initial_moves(g_, cfg_))
      if (!cops_win(p)) return false;
    return true;
  }

  // Announcement that decreases the rank; only meaningful where cops win.
  VertexSet cop_move(const CopTurn& p) const {
    auto ui = u_index_.find(p.cops.bits());
    auto ri = r_index_.find(p.robbers.bits());
    if (ui == u_index_.end() || ri == r_index_.end() || rank_[slot(ui->second, ri->second)] == kLost)
      throw StrategyHole("no winning cop move at " + to_string(p));
    return witness_[slot(ui->second, ri->second)];
  }

  // Largest losing-for-cops opening placement (the first one if none).
  CopTurn robber_start() const {
    const std::vector<CopTurn> moves = initial_moves(g_, cfg_);
    if (moves.empty()) throw PreconditionError("robbers cannot enter an empty graph");
    const CopTurn* best = &moves.front();
    for (const CopTurn& p : moves)
      if (!cops_win(p) && (cops_win(*best) || p.robbers.size() > best->robbers.size())) best = &p;
    return *best;
  }

  // Robber answer that stays outside the cops' winning region when possible,
  // preferring as many robbers as allowed.
  CopTurn robber_move(const RobberTurn& p) const {
    VertexSet avail = robber_reach(g_, p) - p.announced;
    const int size = std::min(cfg_.r, avail.size());
    std::optional<CopTurn> pick;
    for_each_subset_of_size(avail, size, [&](VertexSet next) {
      CopTurn c{p.announced, next};
      if (!pick) pick = c;
      if (!cops_win(c)) {
        pick = c;
        return false;
      }
      return true;
    });
    return *pick;
  }

 private:
  std::size_t slot(int u, int r) const { return static_cast<std::size_t>(u) * rs_.size() + r; }

  void solve() {
    bool changed = true;
    for (int round = 1; changed; ++round) {
      changed = false;
      for (std::size_t ui = 0; ui < us_.size(); ++ui) {
        const VertexSet u = us_[ui];
        for (std::size_t ri = 0; ri < rs_.size(); ++ri) {
          const VertexSet r = rs_[ri];
          std::size_t s = slot(static_cast<int>(ui), static_cast<int>(ri));
          if (rank_[s] != kLost || u.intersects(r)) continue;
          if (auto m = winning_move(u, r, round)) {
            rank_[s] = round;
            witness_[s] = *m;
            changed = true;
          }
        }
      }
    }
  }

  std::optional<VertexSet> winning_move(VertexSet u, VertexSet r, int round) const {
    CopTurn here{u, r};
    VertexSet region = announcement_region(g_, cfg_, here);
    if (cfg_.prune_unreachable) region &= u | reach_excluding(g_, u, r);
    std::optional<VertexSet> found;
    for_each_subset_up_to(region, cfg_.k, [&](VertexSet next) {
      RobberTurn mv{u, next, r};
      VertexSet reach = robber_reach(g_, mv);
      if ((u - next).intersects(reach)) return true;
      VertexSet avail = reach - next;
      const int size = std::min(cfg_.r, avail.size());
      bool all_lower = true;
      if (size > 0) {
        for_each_subset_of_size(avail, size, [&](VertexSet answer) {
          int rk = rank_[slot(u_index_.at(next.bits()), r_index_.at(answer.bits()))];
          if (rk >= round) {
            all_lower = false;
            return false;
          }
          return true;
        });
      }
      if (all_lower) {
        found = next;
        return false;
      }
      return true;
    });
    return found;
  }

  Digraph g_;
  SearchConfig cfg_;
  std::vector<VertexSet> us_, rs_;
  std::unordered_map<std::uint64_t, int> u_index_, r_index_;
  std::vector<int> rank_;
  std::vector<VertexSet> witness_;
};

struct SolveResult {
  Winner winner = Winner::Robbers;
  std::shared_ptr<const SolvedArena> arena;
  // Positional cop strategy restricted to positions reachable under it
  // (present iff cops win).
  std::unordered_map<CopTurn, VertexSet> cop_strategy;
  std::size_t arena_size = 0;
};

inline SolveResult solve_search(const Digraph& g, const SearchConfig& cfg) {
  SolveResult res;
  auto arena = std::make_shared<const SolvedArena>(g, cfg);
  res.arena = arena;
  res.arena_size = arena->size();
  res.winner = arena->cops_win() ? Winner::Cops : Winner::Robbers;
  if (res.winner == Winner::Cops) {
    std::vector<CopTurn> todo = initial_moves(g, cfg);
    while (!todo.empty()) {
      CopTurn p = todo.back();
      todo.pop_back();
      if (p.robbers.empty() || res.cop_strategy.count(p)) continue;
      VertexSet next = arena->cop_move(p);
      res.cop_strategy.emplace(p, next);
      for (const CopTurn& q : robber_moves(g, cfg, RobberTurn{p.cops, next, p.robbers}))
        if (!q.robbers.empty() && !res.cop_strategy.count(q)) todo.push_back(q);
    }
  }
  return res;
}

struct InvisibleResult {
  bool cops_win = false;
  // Successive cop placements clearing the graph (when cops win).
  std::vector<VertexSet> placements;
  std::size_t states = 0;
};

// Contaminated-set step: returns the new contaminated set, or nullopt if
// the move from `cops` to `next` recontaminates a lifted cop's vertex.
inline std::optional<VertexSet> clear_step(const Digraph& g, VertexSet cops, VertexSet next,
                                           VertexSet contaminated) {
  VertexSet reach = reach_excluding(g, cops & next, contaminated);
  if ((cops - next).intersects(reach)) return std::nullopt;
  return reach - next;
}

// Monotone clearing against an invisible robber with k cops, searched
// breadth-first over (cops, contaminated) states starting from (empty, V).
inline InvisibleResult solve_invisible(const Digraph& g, int k, std::size_t budget = default_budget()) {
  InvisibleResult res;
  if (g.size() == 0) {
    res.cops_win = true;
    return res;
  }
  struct State {
    VertexSet cops, dirty;
    int parent;
  };
  std::vector<State> states{{VertexSet{}, g.vertices(), -1}};
  std::unordered_map<CopTurn, int> seen{{CopTurn{VertexSet{}, g.vertices()}, 0}};
  for (std::size_t head = 0; head < states.size(); ++head) {
    const State cur = states[head];
    int goal = -1;
    for_each_subset_up_to(cur.cops | cur.dirty, k, [&](VertexSet next) {
      auto dirty = clear_step(g, cur.cops, next, cur.dirty);
      if (!dirty) return true;
      CopTurn key{next, *dirty};
      if (seen.count(key)) return true;
      if (states.size() >= budget)
        throw ResourceError("invisible arena exceeded budget " + std::to_string(budget), budget, k);
      seen.emplace(key, static_cast<int>(states.size()));
      states.push_back({next, *dirty, static_cast<int>(head)});
      if (dirty->empty()) {
        goal = static_cast<int>(states.size()) - 1;
        return false;
      }
      return true;
    });
    if (goal >= 0) {
      res.cops_win = true;
      for (int i = goal; i > 0; i = states[i].parent) res.placements.push_back(states[i].cops);
      std::reverse(res.placements.begin(), res.placements.end());
      break;
    }
  }
  res.states = states.size();
  return res;
}

// Replays a placement schedule against an invisible robber. Returns an
// empty string on success, otherwise the reason it fails.
inline std::string check_clearing_schedule(const Digraph& g, const std::vector<VertexSet>& placements,
                                           int k) {
  VertexSet cops, dirty = g.vertices();
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const VertexSet next = placements[i];
    if (next.size() > k)
      return "step " + std::to_string(i) + " uses " + std::to_string(next.size()) + " cops";
    auto d = clear_step(g, cops, next, dirty);
    if (!d) return "step " + std::to_string(i) + " recontaminates " + to_string(cops - next);
    cops = next;
    dirty = *d;
  }
  if (!dirty.empty()) return "contaminated vertices remain: " + to_string(dirty);
  return "";
}

enum class Measure { DagWidth, DwR, TwR, TreeWidth, PathWidth };

inline Measure parse_measure(const std::string& s) {
  if (s == "dw") return Measure::DagWidth;
  if (s == "dw_r") return Measure::DwR;
  if (s == "tw_r") return Measure::TwR;
  if (s == "tw") return Measure::TreeWidth;
  if (s == "dpw") return Measure::PathWidth;
  throw ConfigError("unknown measure '" + s + "' (expected dw, dw_r, tw_r, tw, dpw)");
}

inline const char* to_string(Measure m) {
  switch (m) {
    case Measure::DagWidth: return "dw";
    case Measure::DwR: return "dw_r";
    case Measure::TwR: return "tw_r";
    case Measure::TreeWidth: return "tw";
    case Measure::PathWidth: return "dpw";
  }
  return "?";
}

// Least k such that k cops win the visible game against r robbers.
inline int cop_number(const Digraph& g, int r, std::size_t budget = default_budget()) {
  if (g.size() == 0) return 0;
  for (int k = 1;; ++k) {
    SearchConfig cfg;
    cfg.k = k;
    cfg.r = r;
    cfg.budget = budget;
    if (SolvedArena(g, cfg).cops_win()) return k;
  }
}

// Least k such that k cops clear g against an invisible robber.
inline int invisible_cop_number(const Digraph& g, std::size_t budget = default_budget()) {
  if (g.size() == 0) return 0;
  for (int k = 1;; ++k)
    if (solve_invisible(g, k, budget).cops_win) return k;
}

// dpw follows the cop-count convention: one more than the usual directed
// path-width. tw is tw_1 - 1.
inline int width(const Digraph& g, Measure m, int r = 1, std::size_t budget = default_budget()) {
  switch (m) {
    case Measure::DagWidth: return cop_number(g, 1, budget);
    case Measure::DwR: return cop_number(g, r, budget);
    case Measure::TwR: return cop_number(symmetric_closure(g), r, budget);
    case Measure::TreeWidth: return cop_number(symmetric_closure(g), 1, budget) - 1;
    case Measure::PathWidth: return invisible_cop_number(g, budget);
  }
  return -1;
}

}  // namespace pw
