#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arena.hpp"
#include "digraph.hpp"
#include "errors.hpp"

namespace pw {

using History = std::vector<SearchPosition>;

// One play's worth of cop state. announce() is called at every cop turn;
// the first call initialises the memory, later calls update it first.
class CopAgent {
 public:
  virtual ~CopAgent() = default;
  virtual VertexSet announce(const CopTurn& pos) = 0;
  virtual std::unique_ptr<CopAgent> clone() const = 0;
  // Serialisation of the memory; equal keys mean equal future behaviour.
  virtual std::string memory_key() const { return ""; }
};

class RobberAgent {
 public:
  virtual ~RobberAgent() = default;
  virtual CopTurn place() = 0;
  virtual CopTurn respond(const RobberTurn& pos) = 0;
  virtual std::unique_ptr<RobberAgent> clone() const = 0;
  virtual std::string memory_key() const { return ""; }
};

// Shareable strategy handle; start() yields a fresh agent for one play.
class CopStrategy {
 public:
  CopStrategy() = default;
  CopStrategy(std::shared_ptr<const CopAgent> proto, int k, std::string name = "")
      : proto_(std::move(proto)), k_(k), name_(std::move(name)) {}
  std::unique_ptr<CopAgent> start() const { return proto_->clone(); }
  int cops() const { return k_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const CopAgent> proto_;
  int k_ = 0;
  std::string name_;
};

class RobberStrategy {
 public:
  RobberStrategy() = default;
  RobberStrategy(std::shared_ptr<const RobberAgent> proto, int r, std::string name = "")
      : proto_(std::move(proto)), r_(r), name_(std::move(name)) {}
  std::unique_ptr<RobberAgent> start() const { return proto_->clone(); }
  int robbers() const { return r_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const RobberAgent> proto_;
  int r_ = 1;
  std::string name_;
};

using CopMap = std::unordered_map<CopTurn, VertexSet>;

// Positional cop strategy: a map from cop positions to announcements.
struct PositionalCopStrategy {
  CopMap moves;
  int k = 0;

  VertexSet at(const CopTurn& p) const {
    auto it = moves.find(p);
    if (it == moves.end()) throw StrategyHole("cop strategy undefined at " + to_string(p));
    return it->second;
  }
};

class PositionalCopAgent : public CopAgent {
 public:
  explicit PositionalCopAgent(std::shared_ptr<const PositionalCopStrategy> s) : s_(std::move(s)) {}
  VertexSet announce(const CopTurn& pos) override { return s_->at(pos); }
  std::unique_ptr<CopAgent> clone() const override { return std::make_unique<PositionalCopAgent>(*this); }

 private:
  std::shared_ptr<const PositionalCopStrategy> s_;
};

inline CopStrategy as_strategy(const PositionalCopStrategy& s, std::string name = "positional") {
  return CopStrategy(std::make_shared<PositionalCopAgent>(std::make_shared<PositionalCopStrategy>(s)), s.k,
                     std::move(name));
}

// Memory strategy (M, init, upd) with a move function.
template <class M>
class MemoryCopAgent : public CopAgent {
 public:
  struct Spec {
    std::function<M(const CopTurn&)> init;
    std::function<M(const M&, const CopTurn&)> update;
    std::function<VertexSet(const M&, const CopTurn&)> move;
    std::function<std::string(const M&)> key;
  };

  explicit MemoryCopAgent(std::shared_ptr<const Spec> spec) : spec_(std::move(spec)) {}

  VertexSet announce(const CopTurn& pos) override {
    memory_ = memory_ ? spec_->update(*memory_, pos) : spec_->init(pos);
    return spec_->move(*memory_, pos);
  }
  std::unique_ptr<CopAgent> clone() const override { return std::make_unique<MemoryCopAgent>(*this); }
  std::string memory_key() const override { return memory_ ? spec_->key(*memory_) : "-"; }
  const std::optional<M>& memory() const { return memory_; }

 private:
  std::shared_ptr<const Spec> spec_;
  std::optional<M> memory_;
};

template <class M>
CopStrategy memory_strategy(typename MemoryCopAgent<M>::Spec spec, int k, std::string name) {
  auto shared = std::make_shared<const typename MemoryCopAgent<M>::Spec>(std::move(spec));
  return CopStrategy(std::make_shared<MemoryCopAgent<M>>(shared), k, std::move(name));
}

// Positional robber strategy given by two functions.
class FunctionRobberAgent : public RobberAgent {
 public:
  FunctionRobberAgent(std::function<CopTurn()> place, std::function<CopTurn(const RobberTurn&)> respond)
      : place_(std::move(place)), respond_(std::move(respond)) {}
  CopTurn place() override { return place_(); }
  CopTurn respond(const RobberTurn& pos) override { return respond_(pos); }
  std::unique_ptr<RobberAgent> clone() const override { return std::make_unique<FunctionRobberAgent>(*this); }

 private:
  std::function<CopTurn()> place_;
  std::function<CopTurn(const RobberTurn&)> respond_;
};

// Robber strategy read off a solved arena (winning where robbers win).
inline RobberStrategy solver_robber_strategy(std::shared_ptr<const SolvedArena> arena) {
  auto agent = std::make_shared<FunctionRobberAgent>([arena] { return arena->robber_start(); },
                                                     [arena](const RobberTurn& p) { return arena->robber_move(p); });
  return RobberStrategy(agent, arena->config().r, "solver");
}

inline PositionalCopStrategy solver_cop_strategy(const SolveResult& res) {
  if (res.winner != Winner::Cops) throw PreconditionError("cops do not win this arena");
  return {res.cop_strategy, res.arena->config().k};
}

// ---------------------------------------------------------------------------
// Robber-side conditions

// No robber reaches another one in G - U.
inline bool is_isolating(const Digraph& g, const CopTurn& pos) {
  for (Vertex v : pos.robbers)
    if (reach_excluding(g, pos.cops, v).intersects(pos.robbers - VertexSet::single(v))) return false;
  return true;
}

// New robber vertices are unreachable from the old robbers once U' lands.
inline bool is_prudent(const Digraph& g, const RobberTurn& from, VertexSet next) {
  return !(next - from.robbers).intersects(reach_excluding(g, from.announced, from.robbers));
}

inline bool is_legal_answer(const Digraph& g, int r, const RobberTurn& from, const CopTurn& to) {
  return to.cops == from.announced && to.robbers.size() <= r && !to.robbers.intersects(from.announced) &&
         to.robbers.subset_of(robber_reach(g, from));
}

// ---------------------------------------------------------------------------
// Playouts

enum class Verdict { CopsWin, RobbersWin, NonMonotone, BudgetExceeded };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CopsWin: return "CopsWin";
    case Verdict::RobbersWin: return "RobbersWin";
    case Verdict::NonMonotone: return "NonMonotone";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

struct PlayResult {
  History trace;
  Verdict verdict = Verdict::BudgetExceeded;
};

// Plays the two strategies against each other. A repeated state (position
// plus both memories) means the play is infinite and the robbers win.
inline PlayResult playout(const Digraph& g, const SearchConfig& cfg, const CopStrategy& cops,
                          const RobberStrategy& robbers, std::size_t step_budget = 100000) {
  PlayResult res;
  auto cop = cops.start();
  auto rob = robbers.start();
  res.trace.push_back(InitialPosition{});
  CopTurn pos = rob->place();
  if (!pos.cops.empty() || pos.robbers.empty() || pos.robbers.size() > cfg.r)
    throw PreconditionError("illegal opening placement " + to_string(pos));
  g.check_set(pos.robbers);
  res.trace.push_back(pos);
  std::unordered_set<std::string> seen;
  for (std::size_t step = 0;; ++step) {
    if (pos.robbers.empty()) {
      res.verdict = Verdict::CopsWin;
      return res;
    }
    if (step >= step_budget) {
      res.verdict = Verdict::BudgetExceeded;
      return res;
    }
    VertexSet next = cop->announce(pos);
    if (next.size() > cfg.k)
      throw PreconditionError("announcement " + to_string(next) + " exceeds " + std::to_string(cfg.k) + " cops");
    RobberTurn mv{pos.cops, next, pos.robbers};
    res.trace.push_back(mv);
    if (!is_monotone_move(g, mv)) {
      res.verdict = Verdict::NonMonotone;
      return res;
    }
    std::string key = std::to_string(mv.cops.bits()) + "/" + std::to_string(mv.announced.bits()) + "/" +
                      std::to_string(mv.robbers.bits()) + "|" + cop->memory_key() + "|" + rob->memory_key();
    if (!seen.insert(key).second) {
      res.verdict = Verdict::RobbersWin;
      return res;
    }
    CopTurn answer = rob->respond(mv);
    if (!is_legal_answer(g, cfg.r, mv, answer))
      throw PreconditionError("illegal robber answer " + to_string(answer) + " at " + to_string(mv));
    res.trace.push_back(answer);
    pos = answer;
  }
}

// ---------------------------------------------------------------------------
// Exhaustive verification of a cop strategy against every robber behaviour.

struct StrategyCheck {
  bool ok = true;
  std::string failure;
  History witness;  // play leading to the failure
  std::size_t states = 0;
  int max_cops = 0;
  History sample;  // first explored play, robbers taking maximal answers
};

struct CopCheckOptions {
  int r = 1;
  int k = 0;  // cop bound; 0 means the strategy's own
  // Optional filters restricting the robbers (e.g. to prudent, isolating play).
  std::function<bool(const CopTurn&)> initial_filter;
  std::function<bool(const RobberTurn&, const CopTurn&)> answer_filter;
  // Optional per-announcement check returning an error message.
  std::function<std::string(const CopTurn&, VertexSet, const CopAgent&)> on_announce;
  std::size_t budget = default_budget();
};

// Depth-first over (position, memory) states. Robbers try every legal
// answer, largest first. The strategy wins iff no state repeats along a
// path, every announcement is monotone and within the bound, and every
// path ends with no robbers left.
inline StrategyCheck verify_cop_strategy(const Digraph& g, const CopStrategy& strategy, const CopCheckOptions& opt) {
  StrategyCheck res;
  const int bound = opt.k > 0 ? opt.k : strategy.cops();
  struct Frame {
    CopTurn pos;
    std::string key;
    std::unique_ptr<CopAgent> agent;
    RobberTurn move;
    std::vector<CopTurn> answers;
    std::size_t next = 0;
  };
  std::unordered_set<std::string> done, active;
  bool sampling = true;

  auto state_key = [](const CopTurn& p, const CopAgent& a) {
    return std::to_string(p.cops.bits()) + "/" + std::to_string(p.robbers.bits()) + "|" + a.memory_key();
  };
  auto fail = [&](const std::vector<Frame>& stack, const std::string& why, const std::optional<RobberTurn>& last) {
    res.ok = false;
    res.failure = why;
    res.witness = {InitialPosition{}};
    for (std::size_t i = 0; i < stack.size(); ++i) {
      res.witness.push_back(stack[i].pos);
      if (i + 1 < stack.size()) res.witness.push_back(stack[i].move);
    }
    if (last) res.witness.push_back(*last);
  };

  std::vector<CopTurn> openings;
  for (const CopTurn& p : initial_moves(g, SearchConfig{.k = bound, .r = opt.r}))
    if (!opt.initial_filter || opt.initial_filter(p)) openings.push_back(p);
  std::sort(openings.begin(), openings.end(),
            [](const CopTurn& a, const CopTurn& b) { return a.robbers.size() > b.robbers.size(); });

  for (const CopTurn& open : openings) {
    std::vector<Frame> stack;
    auto enter = [&](const CopTurn& p, std::unique_ptr<CopAgent> agent) -> bool {
      if (p.robbers.empty()) {
        if (sampling) {
          res.sample = {InitialPosition{}};
          for (auto& f : stack) {
            res.sample.push_back(f.pos);
            res.sample.push_back(f.move);
          }
          res.sample.push_back(p);
          sampling = false;
        }
        return true;
      }
      // Announce first so the key reflects the updated memory.
      Frame f{p, "", std::move(agent), {}, {}, 0};
      VertexSet next;
      try {
        next = f.agent->announce(p);
      } catch (const InvariantViolation& e) {
        stack.push_back(std::move(f));
        fail(stack, std::string("invariant ") + e.what(), std::nullopt);
        return false;
      } catch (const std::logic_error& e) {
        stack.push_back(std::move(f));
        fail(stack, e.what(), std::nullopt);
        return false;
      }
      f.key = state_key(p, *f.agent);
      if (done.count(f.key)) return true;
      if (active.count(f.key)) {
        stack.push_back(std::move(f));
        fail(stack, "robbers can force a repeated state (infinite play)", std::nullopt);
        return false;
      }
      f.move = RobberTurn{p.cops, next, p.robbers};
      res.max_cops = std::max(res.max_cops, next.size());
      if (next.size() > bound) {
        stack.push_back(std::move(f));
        fail(stack, "announcement uses " + std::to_string(next.size()) + " cops, bound " + std::to_string(bound),
             stack.back().move);
        return false;
      }
      if (!is_monotone_move(g, f.move)) {
        stack.push_back(std::move(f));
        fail(stack, "non-monotone announcement", stack.back().move);
        return false;
      }
      if (opt.on_announce) {
        std::string err = opt.on_announce(p, next, *f.agent);
        if (!err.empty()) {
          stack.push_back(std::move(f));
          fail(stack, err, stack.back().move);
          return false;
        }
      }
      VertexSet avail = robber_reach(g, f.move) - next;
      for (int size = std::min(opt.r, avail.size()); size >= 0; --size)
        for_each_subset_of_size(avail, size, [&](VertexSet rs) {
          CopTurn a{next, rs};
          if (!opt.answer_filter || opt.answer_filter(f.move, a)) f.answers.push_back(a);
        });
      if (++res.states > opt.budget)
        throw ResourceError("strategy check exceeded budget " + std::to_string(opt.budget), opt.budget, bound);
      active.insert(f.key);
      stack.push_back(std::move(f));
      return true;
    };

    if (!enter(open, strategy.start())) return res;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.answers.size()) {
        if (top.answers.empty()) {
          fail(stack, "robbers have no permitted answer", top.move);
          return res;
        }
        active.erase(top.key);
        done.insert(top.key);
        stack.pop_back();
        continue;
      }
      CopTurn a = top.answers[top.next++];
      if (!enter(a, top.agent->clone())) return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive cop search against a fixed robber strategy.

struct RobberCheck {
  bool robbers_win = true;
  bool conditions_ok = true;
  std::string failure;
  History witness;
  std::size_t states = 0;
};

struct RobberCheckOptions {
  // Condition on each robber step (the opening has `from` == nullopt);
  // returns an error message.
  std::function<std::string(const std::optional<RobberTurn>& from, const CopTurn& to)> step_check;
  std::size_t budget = default_budget();
};

// Breadth-first over (position, robber memory) for every announcement the
// configuration allows. Non-monotone announcements lose for the cops and are
// skipped. The robber strategy wins iff no reachable state has no robbers.
inline RobberCheck cop_search_vs_robber(const Digraph& g, const SearchConfig& cfg, const RobberStrategy& robbers,
                                        const RobberCheckOptions& opt = {}) {
  RobberCheck res;
  struct Node {
    CopTurn pos;
    std::unique_ptr<RobberAgent> agent;
    int parent;
    RobberTurn via;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  auto key = [](const CopTurn& p, const RobberAgent& a) {
    return std::to_string(p.cops.bits()) + "/" + std::to_string(p.robbers.bits()) + "|" + a.memory_key();
  };
  auto witness = [&](int i, const std::optional<RobberTurn>& last) {
    History h;
    for (; i >= 0; i = nodes[i].parent) {
      h.push_back(nodes[i].pos);
      if (nodes[i].parent >= 0) h.push_back(nodes[i].via);
    }
    h.push_back(InitialPosition{});
    std::reverse(h.begin(), h.end());
    if (last) h.push_back(*last);
    return h;
  };

  auto root = robbers.start();
  CopTurn first = root->place();
  if (opt.step_check) {
    std::string err = opt.step_check(std::nullopt, first);
    if (!err.empty()) {
      res.conditions_ok = false;
      res.failure = err;
      res.witness = {InitialPosition{}, first};
      return res;
    }
  }
  seen.insert(key(first, *root));
  nodes.push_back({first, std::move(root), -1, {}});
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const CopTurn pos = nodes[head].pos;
    for (const RobberTurn& mv : cop_moves(g, cfg, pos)) {
      if (!is_monotone_move(g, mv)) continue;
      auto agent = nodes[head].agent->clone();
      CopTurn answer = agent->respond(mv);
      if (!is_legal_answer(g, cfg.r, mv, answer)) {
        res.conditions_ok = false;
        res.robbers_win = false;
        res.failure = "illegal robber answer " + to_string(answer);
        res.witness = witness(static_cast<int>(head), mv);
        return res;
      }
      if (opt.step_check) {
        std::string err = opt.step_check(mv, answer);
        if (!err.empty()) {
          res.conditions_ok = false;
          res.failure = err;
          res.witness = witness(static_cast<int>(head), mv);
          res.witness.push_back(answer);
          return res;
        }
      }
      if (answer.robbers.empty()) {
        res.robbers_win = false;
        res.failure = "cops catch all robbers";
        res.witness = witness(static_cast<int>(head), mv);
        res.witness.push_back(answer);
        return res;
      }
      if (!seen.insert(key(answer, *agent)).second) continue;
      if (nodes.size() >= opt.budget)
        throw ResourceError("cop search exceeded budget " + std::to_string(opt.budget), opt.budget, cfg.k);
      nodes.push_back({answer, std::move(agent), static_cast<int>(head), mv});
    }
  }
  res.states = nodes.size();
  return res;
}

// ---------------------------------------------------------------------------
// Robber normal forms

// One robber (the smallest) from each SCC of G - U occupied by `robbers`
// that no other occupied SCC reaches.
inline VertexSet source_representatives(const Digraph& g, VertexSet cops, VertexSet robbers) {
  VertexSet reps;
  SccPartition part = sccs(g, cops);
  for (Vertex x : robbers) {
    if (cops.contains(x)) continue;
    VertexSet comp = part.block_of(x);
    if (x != (comp & robbers).front()) continue;
    VertexSet others = robbers - comp - cops;
    if (others.empty() || !reach_excluding(g, cops, others).intersects(comp)) reps.insert(x);
  }
  return reps;
}

// Plays a base robber strategy in the background ("shadow" robbers) and
// only fields representatives of its source components. With `prudent`,
// a representative that is still reachable from the current robbers after
// the cops land is replaced by a robber that stays put and reaches it.
class NormalFormRobberAgent : public RobberAgent {
 public:
  NormalFormRobberAgent(const Digraph& g, std::unique_ptr<RobberAgent> base, bool prudent)
      : g_(std::make_shared<const Digraph>(g)), base_(std::move(base)), prudent_(prudent) {}
  NormalFormRobberAgent(const NormalFormRobberAgent& o)
      : g_(o.g_), base_(o.base_->clone()), prudent_(o.prudent_), shadow_(o.shadow_) {}

  CopTurn place() override {
    CopTurn p = base_->place();
    shadow_ = p.robbers;
    return {p.cops, source_representatives(*g_, p.cops, p.robbers)};
  }

  CopTurn respond(const RobberTurn& mv) override {
    CopTurn base_answer = base_->respond({mv.cops, mv.announced, shadow_});
    shadow_ = base_answer.robbers;
    VertexSet reps = source_representatives(*g_, mv.announced, shadow_);
    if (!prudent_) return {mv.announced, reps};
    VertexSet staying = mv.robbers - mv.announced;
    VertexSet chosen;
    for (Vertex x : reps) {
      std::optional<Vertex> stay;
      for (Vertex y : staying)
        if (reach_excluding(*g_, mv.announced, y).contains(x)) {
          stay = y;
          break;
        }
      chosen.insert(stay ? *stay : x);
    }
    return {mv.announced, source_representatives(*g_, mv.announced, chosen)};
  }

  std::unique_ptr<RobberAgent> clone() const override { return std::make_unique<NormalFormRobberAgent>(*this); }
  std::string memory_key() const override { return std::to_string(shadow_.bits()) + ";" + base_->memory_key(); }

 private:
  std::shared_ptr<const Digraph> g_;
  std::unique_ptr<RobberAgent> base_;
  bool prudent_;
  VertexSet shadow_;
};

namespace detail {

inline void require_robber_win(const Digraph& g, const SearchConfig& cfg, const RobberStrategy& s) {
  RobberCheck chk = cop_search_vs_robber(g, cfg, s);
  if (!chk.robbers_win) {
    std::string play;
    for (const auto& p : chk.witness) play += " " + to_string(p);
    throw PreconditionError("robber strategy is not winning: " + chk.failure + ";" + play);
  }
}

class NormalFormProto : public RobberAgent {
 public:
  NormalFormProto(const Digraph& g, RobberStrategy base, bool prudent)
      : g_(g), base_(std::move(base)), prudent_(prudent) {}
  CopTurn place() override { throw std::logic_error("prototype agent"); }
  CopTurn respond(const RobberTurn&) override { throw std::logic_error("prototype agent"); }
  std::unique_ptr<RobberAgent> clone() const override {
    return std::make_unique<NormalFormRobberAgent>(g_, base_.start(), prudent_);
  }

 private:
  Digraph g_;
  RobberStrategy base_;
  bool prudent_;
};

}  // namespace detail

// Isolating version of a winning robber strategy.
inline RobberStrategy isolating_transform(const Digraph& g, const SearchConfig& cfg, const RobberStrategy& s,
                                          bool check_precondition = true) {
  if (check_precondition) detail::require_robber_win(g, cfg, s);
  return RobberStrategy(std::make_shared<detail::NormalFormProto>(g, s, false), s.robbers(), "isolating");
}

// Isolating and prudent version of a winning robber strategy.
inline RobberStrategy prudent_transform(const Digraph& g, const SearchConfig& cfg, const RobberStrategy& s,
                                        bool check_precondition = true) {
  if (check_precondition) detail::require_robber_win(g, cfg, s);
  return RobberStrategy(std::make_shared<detail::NormalFormProto>(g, s, true), s.robbers(), "prudent");
}

inline std::string isolating_step_error(const Digraph& g, const CopTurn& to) {
  if (is_isolating(g, to)) return "";
  return "robbers " + to_string(to.robbers) + " not isolating against cops " + to_string(to.cops);
}

inline std::string prudent_step_error(const Digraph& g, const std::optional<RobberTurn>& from, const CopTurn& to) {
  if (!from || is_prudent(g, *from, to.robbers)) return "";
  return "robber move " + to_string(*from) + " -> " + to_string(to.robbers) + " is not prudent";
}

// ---------------------------------------------------------------------------
// Cop strategy cleanup

inline CopCheckOptions single_robber_check(int k) {
  CopCheckOptions o;
  o.r = 1;
  o.k = k;
  return o;
}

inline std::string describe(const History& h) {
  std::string s;
  for (const auto& p : h) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

// Normal form of a positional one-robber cop strategy: every announcement
// places at least one new cop, and new cops only go where the robber can
// still get to. At (U, v) the original strategy is replayed from a
// corresponding original position while the robber stays on v, until it
// places a cop the robber can reach; cops the robber can no longer reach are
// not placed.
inline PositionalCopStrategy cleanup_strategy(const Digraph& g, const PositionalCopStrategy& f,
                                              bool check_precondition = true) {
  if (check_precondition) {
    StrategyCheck chk = verify_cop_strategy(g, as_strategy(f), single_robber_check(f.k));
    if (!chk.ok)
      throw PreconditionError("input strategy is not monotone winning: " + chk.failure + "; play " +
                              describe(chk.witness));
  }
  PositionalCopStrategy out;
  out.k = f.k;
  CopMap origin;  // cleaned position -> corresponding original cop set
  std::deque<CopTurn> todo;
  for (Vertex v = 0; v < g.size(); ++v) {
    CopTurn p{{}, VertexSet::single(v)};
    origin.emplace(p, VertexSet{});
    todo.push_back(p);
  }
  while (!todo.empty()) {
    const CopTurn p = todo.front();
    todo.pop_front();
    const Vertex v = p.robbers.front();
    const VertexSet area = reach_excluding(g, p.cops, v);
    VertexSet orig = origin.at(p);
    std::unordered_set<VertexSet> idle{orig};
    VertexSet after;
    while (true) {
      after = f.at({orig, p.robbers});
      if ((after - orig).intersects(area)) break;
      orig = after;
      if (!idle.insert(orig).second)
        throw PreconditionError("strategy idles forever at " + to_string(CopTurn{orig, p.robbers}));
    }
    const VertexSet next = after & (p.cops | area);
    out.moves.emplace(p, next);
    const VertexSet escape = reach_excluding(g, p.cops & next, v) - next;
    for (Vertex w : escape) {
      CopTurn q{next, VertexSet::single(w)};
      if (origin.emplace(q, after).second) todo.push_back(q);
    }
  }
  return out;
}

// Empty string if every reachable position of s obeys the normal form.
inline std::string cleanup_contract_error(const Digraph& g, const PositionalCopStrategy& s) {
  for (const auto& [p, next] : s.moves) {
    VertexSet placed = next - p.cops;
    if (placed.empty()) return "no new cop at " + to_string(p);
    if (!placed.subset_of(reach_excluding(g, p.cops, p.robbers)))
      return "cop placed out of the robber's reach at " + to_string(p);
  }
  return "";
}

// ---------------------------------------------------------------------------
// Text format: one "U ; R -> U'" line per mapping, sets as sorted lists.

inline std::string write_strategy(const PositionalCopStrategy& s) {
  std::vector<std::pair<CopTurn, VertexSet>> rows(s.moves.begin(), s.moves.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.cops, a.first.robbers) < std::tie(b.first.cops, b.first.robbers);
  });
  std::string out;
  for (const auto& [p, next] : rows) out += join(p.cops) + " ; " + join(p.robbers) + " -> " + join(next) + "\n";
  return out;
}

inline PositionalCopStrategy parse_strategy(const std::string& text, int k) {
  PositionalCopStrategy s;
  s.k = k;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto parse_set = [&](std::string part) {
    VertexSet out;
    for (char& c : part)
      if (c == ',') c = ' ';
    std::istringstream ss(part);
    for (std::string tok; ss >> tok;) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0 || v >= VertexSet::kMaxVertices) throw std::invalid_argument(tok);
        out.insert(v);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      }
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto semi = line.find(';');
    auto arrow = line.find("->");
    if (semi == std::string::npos || arrow == std::string::npos || arrow < semi)
      throw InputError("line " + std::to_string(lineno) + ": expected 'U ; R -> U''");
    CopTurn p{parse_set(line.substr(0, semi)), parse_set(line.substr(semi + 1, arrow - semi - 1))};
    s.moves[p] = parse_set(line.substr(arrow + 2));
  }
  return s;
}

}  // namespace pw
