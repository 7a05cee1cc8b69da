#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arena.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "strategy.hpp"

namespace pw {

// Team strategy for r robbers built from a positional one-robber cop
// strategy f (in cleanup normal form). The memory keeps a chain of
// one-robber histories h_1 < ... < h_s (prefix order). Each history
// but the last carries the robbers assigned to it and the set of vertices
// where its cop placements were omitted.
//
// Indices in this file are 0-based: entry i corresponds to history i+1.

struct HistoryEntry {
  History history;  // ends with a robber-turn position
  VertexSet robbers;
  VertexSet omitted;
  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct TeamRecord {
  std::vector<HistoryEntry> entries;
  History last;  // the longest history
  friend bool operator==(const TeamRecord&, const TeamRecord&) = default;

  int s() const { return static_cast<int>(entries.size()) + 1; }
  const History& history_of(int i) const { return i + 1 == s() ? last : entries.at(i).history; }
};

namespace detail {

inline bool is_cop_pos(const SearchPosition& p) { return std::holds_alternative<CopTurn>(p); }

// Cop set W and robber vertex b at the end of a history; for a robber-turn
// ending also the previous cop set.
struct HistoryTail {
  VertexSet before;  // W^{-1}; equals `cops` for a cop-turn ending
  VertexSet cops;    // W
  Vertex robber;     // b
  bool cop_turn;
};

inline HistoryTail tail(const History& h) {
  const SearchPosition& p = h.back();
  if (auto* c = std::get_if<CopTurn>(&p)) return {c->cops, c->cops, c->robbers.front(), true};
  if (auto* m = std::get_if<RobberTurn>(&p)) return {m->cops, m->announced, m->robbers.front(), false};
  throw InvariantViolation("shape", "history ends in the initial position");
}

inline History extend(History h, SearchPosition p) {
  h.push_back(std::move(p));
  return h;
}

inline bool strict_prefix(const History& a, const History& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace detail

inline std::string to_string(const History& h) {
  std::string out;
  for (const auto& p : h) {
    if (std::holds_alternative<InitialPosition>(p)) {
      out += "init";
      continue;
    }
    if (auto* c = std::get_if<CopTurn>(&p))
      out += " (" + to_string(c->cops) + "," + join(c->robbers) + ")";
    else {
      const auto& m = std::get<RobberTurn>(p);
      out += " (" + to_string(m.cops) + "," + to_string(m.announced) + "," + join(m.robbers) + ")";
    }
  }
  return out;
}

inline std::string to_string(const TeamRecord& z) {
  std::string out;
  for (const auto& e : z.entries)
    out += "[" + to_string(e.history) + " ; R=" + to_string(e.robbers) + " ; O=" + to_string(e.omitted) + "] ";
  return out + "[" + to_string(z.last) + "]";
}

// Per-index sets derived from the memory. All vectors have length s.
struct DerivedSets {
  int s = 0;
  std::vector<VertexSet> cops;         // W_i
  std::vector<VertexSet> cops_before;  // W_i^{-1}
  std::vector<Vertex> robber;          // b_i
  std::vector<VertexSet> team;         // U_i = W_i \ O^{i-1}
  std::vector<VertexSet> team_upto;    // U^i
  std::vector<VertexSet> cops_upto;    // W^i
  std::vector<VertexSet> robbers;      // R_i (R_s from b_s)
  std::vector<VertexSet> omitted_upto; // O^i (entry s-1 is O^{s-1} for the last index)
  bool last_cop_turn = false;

  VertexSet omitted_before(int i) const { return i == 0 ? VertexSet{} : omitted_upto[i - 1]; }
  VertexSet all_team() const { return team_upto.back(); }
  VertexSet teams_except(int i) const {
    VertexSet u;
    for (int j = 0; j < s; ++j)
      if (j != i) u |= team[j];
    return u;
  }
};

inline DerivedSets derive(const TeamRecord& z, VertexSet robbers_now) {
  DerivedSets d;
  d.s = z.s();
  VertexSet o_acc, u_acc, w_acc;
  for (int i = 0; i < d.s; ++i) {
    detail::HistoryTail t = detail::tail(z.history_of(i));
    d.cops.push_back(t.cops);
    d.cops_before.push_back(t.before);
    d.robber.push_back(t.robber);
    d.team.push_back(t.cops - o_acc);
    u_acc |= d.team.back();
    w_acc |= t.cops;
    d.team_upto.push_back(u_acc);
    d.cops_upto.push_back(w_acc);
    if (i + 1 < d.s) {
      d.robbers.push_back(z.entries[i].robbers);
      o_acc |= z.entries[i].omitted;
    } else {
      d.robbers.push_back(robbers_now.contains(t.robber) ? VertexSet::single(t.robber) : VertexSet{});
      d.last_cop_turn = t.cop_turn;
    }
    d.omitted_upto.push_back(o_acc);
  }
  return d;
}

inline TeamRecord init_memory(const Digraph& g, VertexSet first_robbers) {
  if (!is_strongly_connected(g)) throw PreconditionError("team strategy needs a strongly connected graph");
  if (first_robbers.size() != 1)
    throw PreconditionError("unsupported initial split: robbers start on " + to_string(first_robbers));
  TeamRecord z;
  z.last = {InitialPosition{}, CopTurn{VertexSet{}, first_robbers}};
  return z;
}

// ---------------------------------------------------------------------------
// Independent invariant checker

enum class Phase {
  CopTurn,      // (U, R) before the cops announce
  AfterAnnounce // (U', R) with the memory after the cops' update
};

struct InvariantReport {
  bool ok = true;
  std::string name;
  std::string witness;
  std::vector<std::string> checked;
};

namespace detail {

// Empty if h is a play prefix consistent with f, else a description.
inline std::string consistency_error(const Digraph& g, const PositionalCopStrategy& f, const History& h) {
  if (h.size() < 2 || !std::holds_alternative<InitialPosition>(h[0])) return "does not start at init";
  for (std::size_t i = 1; i < h.size(); ++i) {
    const SearchPosition& p = h[i];
    if (i % 2 == 1) {
      auto* c = std::get_if<CopTurn>(&p);
      if (!c || c->robbers.size() != 1) return "position " + std::to_string(i) + " is not a one-robber cop turn";
      if (i == 1) {
        if (!c->cops.empty()) return "opening position has cops";
        continue;
      }
      const auto& prev = std::get<RobberTurn>(h[i - 1]);
      if (c->cops != prev.announced) return "cops at " + std::to_string(i) + " differ from announcement";
      VertexSet avail = robber_reach(g, prev) - prev.announced;
      if (!c->robbers.subset_of(avail)) return "robber move at " + std::to_string(i) + " is illegal";
    } else {
      auto* m = std::get_if<RobberTurn>(&p);
      if (!m || m->robbers.size() != 1) return "position " + std::to_string(i) + " is not a one-robber robber turn";
      const auto& prev = std::get<CopTurn>(h[i - 1]);
      if (m->cops != prev.cops || m->robbers != prev.robbers) return "position " + std::to_string(i) + " mismatched";
      auto it = f.moves.find(prev);
      if (it == f.moves.end()) return "strategy undefined at " + to_string(prev);
      if (it->second != m->announced) return "announcement at " + std::to_string(i) + " differs from f";
    }
  }
  return "";
}

}  // namespace detail

// Evaluates the memory invariants and the derived reachability facts at a
// position, recomputing every reachability set from scratch.
inline InvariantReport check_invariants(const Digraph& g, const PositionalCopStrategy& f, Phase phase, VertexSet cops,
                                        VertexSet robbers, const TeamRecord& z, int r) {
  InvariantReport rep;
  auto fail = [&](const char* name, std::string witness) {
    if (rep.ok) {
      rep.ok = false;
      rep.name = name;
      rep.witness = std::move(witness);
    }
  };
  auto check = [&](const char* name) {
    rep.checked.push_back(name);
    return rep.ok;
  };

  // Shape: histories start at init, non-final ones end in robber turns.
  check("shape");
  for (int i = 0; i < z.s(); ++i) {
    const History& h = z.history_of(i);
    if (h.size() < 2 || !std::holds_alternative<InitialPosition>(h[0])) {
      fail("shape", "history " + std::to_string(i + 1) + " malformed");
      return rep;
    }
    if (i + 1 < z.s() && detail::is_cop_pos(h.back())) {
      fail("shape", "history " + std::to_string(i + 1) + " ends with a cop turn");
      return rep;
    }
  }
  const DerivedSets d = derive(z, robbers);
  const int s = d.s;

  if (check("Lin"))
    for (int i = 0; i + 1 < s; ++i)
      if (!detail::strict_prefix(z.history_of(i), z.history_of(i + 1)))
        fail("Lin", "history " + std::to_string(i + 1) + " is not a strict prefix of history " + std::to_string(i + 2));

  if (check("Cons"))
    for (int i = 0; i < s; ++i)
      if (std::string e = detail::consistency_error(g, f, z.history_of(i)); !e.empty())
        fail("Cons", "history " + std::to_string(i + 1) + ": " + e);

  if (check("Robs")) {
    VertexSet seen;
    for (int i = 0; i < s; ++i) {
      if (seen.intersects(d.robbers[i]))
        fail("Robs", "robbers " + to_string(seen & d.robbers[i]) + " assigned twice");
      seen |= d.robbers[i];
    }
    if (seen != robbers) fail("Robs", "assigned " + to_string(seen) + " but robbers are " + to_string(robbers));
  }

  if (check("Cops") && d.all_team() != cops)
    fail("Cops", "teams give " + to_string(d.all_team()) + " but cops are " + to_string(cops));

  if (phase == Phase::CopTurn && check("Cops-last-position") && robbers.contains(d.robber[s - 1]) && !d.last_cop_turn)
    fail("Cops-last-position", "longest history ends with a robber turn while its robber is on the graph");

  if (check("Omit"))
    for (int i = 0; i + 1 < s; ++i) {
      const HistoryEntry& e = z.entries[i];
      if (!e.robbers.subset_of(e.omitted))
        fail("Omit", "robbers " + to_string(e.robbers - e.omitted) + " outside O_" + std::to_string(i + 1));
      VertexSet closure = reach_excluding(g, d.cops[i], e.omitted);
      if (closure != e.omitted)
        fail("Omit", "O_" + std::to_string(i + 1) + " not closed: reaches " + to_string(closure - e.omitted));
    }

  if (check("Ext"))
    for (int i = 0; i + 1 < s; ++i) {
      VertexSet area = reach_excluding(g, d.cops_before[i], d.robber[i]);
      if (!z.entries[i].omitted.subset_of(area))
        fail("Ext", "O_" + std::to_string(i + 1) + " has " + to_string(z.entries[i].omitted - area) +
                        " unreachable from b_" + std::to_string(i + 1));
    }

  if (check("Progress")) {
    for (int i = 1; i + 1 < s; ++i)
      if (d.robbers[i].intersects(d.omitted_upto[i - 1]))
        fail("Progress", "R_" + std::to_string(i + 1) + " meets earlier omitted sets at " +
                             to_string(d.robbers[i] & d.omitted_upto[i - 1]));
    if (s > 1 && d.omitted_upto[s - 2].contains(d.robber[s - 1]))
      fail("Progress", "b_s=" + std::to_string(d.robber[s - 1]) + " lies in an omitted set");
  }

  if (check("history-count")) {
    if (s > r + 1) fail("history-count", std::to_string(s) + " histories for " + std::to_string(r) + " robbers");
    if (s == r + 1 && d.cops[s - 1] != d.cops[s - 2])
      fail("history-count", "r+1 histories but the last two cop sets differ");
  }

  if (check("assigned-robber-consistent"))
    for (int i = 0; i + 1 < s; ++i)
      for (Vertex b : d.robbers[i]) {
        VertexSet ok = reach_excluding(g, d.cops_before[i] & d.cops[i], d.robber[i]) - d.cops[i];
        if (!ok.contains(b))
          fail("assigned-robber-consistent",
               "robber " + std::to_string(b) + " cannot continue history " + std::to_string(i + 1));
      }

  if (check("earlier-cops-irrelevant")) {
    for (int i = 0; i + 1 < s; ++i)
      for (Vertex b : d.robbers[i])
        if (reach_excluding(g, d.cops[i], b) != reach_excluding(g, d.cops_upto[i], b))
          fail("earlier-cops-irrelevant", "robber " + std::to_string(b) + " of history " + std::to_string(i + 1));
    const Vertex bs = d.robber[s - 1];
    if (reach_excluding(g, d.cops[s - 1], bs) != reach_excluding(g, d.cops_upto[s - 1], bs))
      fail("earlier-cops-irrelevant", "longest robber " + std::to_string(bs));
  }

  if (check("team-reach-inside-omitted"))
    for (int i = 0; i + 1 < s; ++i) {
      VertexSet reach = reach_excluding(g, d.team_upto[i], d.robbers[i]);
      if (!reach.subset_of(d.omitted_upto[i]))
        fail("team-reach-inside-omitted", "history " + std::to_string(i + 1) + " robbers reach " +
                                              to_string(reach - d.omitted_upto[i]));
    }

  if (check("later-teams-irrelevant"))
    for (int i = 0; i + 1 < s; ++i)
      for (Vertex b : d.robbers[i])
        if (reach_excluding(g, cops, b) != reach_excluding(g, d.team_upto[i], b))
          fail("later-teams-irrelevant", "robber " + std::to_string(b) + " of history " + std::to_string(i + 1));

  return rep;
}

// ---------------------------------------------------------------------------
// Cop move

struct CopDecision {
  VertexSet announced;
  TeamRecord memory;
  std::string case_tag;  // see cop_move_multiply
};

inline CopDecision cop_move_multiply(const Digraph& g, const PositionalCopStrategy& f, const CopTurn& pos,
                                     const TeamRecord& z) {
  const DerivedSets d = derive(z, pos.robbers);
  const int s = d.s;
  const int last = s - 1;
  CopDecision out;
  out.memory = z;

  if (!pos.robbers.contains(d.robber[last])) {
    if (s == 1) {
      out.announced = VertexSet{};
      out.case_tag = "won";
      return out;
    }
    out.announced = d.team_upto[last - 1];
    HistoryEntry prev = z.entries[last - 1];
    out.memory.entries.pop_back();
    if (prev.robbers.empty()) {
      out.memory.last = detail::extend(prev.history, CopTurn{d.cops[last - 1], VertexSet::single(d.robber[last])});
      out.case_tag = "resume-previous";
    } else {
      const Vertex b = prev.robbers.front();
      const VertexSet rest = prev.robbers - VertexSet::single(b);
      out.memory.entries.push_back({prev.history, rest, reach_excluding(g, d.cops[last - 1], rest)});
      out.memory.last = detail::extend(prev.history, CopTurn{d.cops[last - 1], VertexSet::single(b)});
      out.case_tag = "resume-waiting-robber";
    }
    return out;
  }

  int idle = -1;
  for (int i = 0; i < last; ++i)
    if (z.entries[i].robbers.empty()) {
      idle = i;
      break;
    }

  if (idle >= 0) {
    const int i = idle;
    const History& mine = z.entries[i].history;
    const History& next = z.history_of(i + 1);
    const auto* step = std::get_if<CopTurn>(&next.at(mine.size()));
    if (!step) throw InvariantViolation("Lin", "history " + std::to_string(i + 2) + " does not continue with a cop turn");
    const Vertex bt = step->robbers.front();
    if (next.size() == mine.size() + 1) {
      if (i + 1 != last) throw InvariantViolation("shape", "a non-final history ends with a cop turn");
      out.announced = pos.cops;
      out.memory.entries.erase(out.memory.entries.begin() + i);
      out.case_tag = "drop-idle-history";
      return out;
    }
    const VertexSet wi = d.cops[i];
    const VertexSet wt = f.at({wi, VertexSet::single(bt)});
    out.announced = d.teams_except(i) | (wt - d.omitted_before(i));
    const VertexSet ot = (z.entries[i].omitted & reach_excluding(g, wi, bt)) - wt;
    History rt = detail::extend(detail::extend(mine, CopTurn{wi, VertexSet::single(bt)}),
                                RobberTurn{wi, wt, VertexSet::single(bt)});
    if (rt != next) {
      out.memory.entries[i] = {rt, z.entries[i].robbers, ot};
      out.case_tag = "advance-idle-history";
    } else {
      if (i + 1 == last) throw InvariantViolation("shape", "idle history caught up with the longest one");
      out.memory.entries[i + 1].omitted |= ot;
      out.memory.entries.erase(out.memory.entries.begin() + i);
      out.case_tag = "merge-idle-history";
    }
    return out;
  }

  if (!d.last_cop_turn) throw InvariantViolation("Cops-last-position", "longest history ends with a robber turn");
  const VertexSet wt = f.at({d.cops[last], VertexSet::single(d.robber[last])});
  out.announced = (last > 0 ? d.team_upto[last - 1] : VertexSet{}) | (wt - d.omitted_before(last));
  out.memory.last = detail::extend(z.last, RobberTurn{d.cops[last], wt, VertexSet::single(d.robber[last])});
  out.case_tag = "advance-longest";
  return out;
}

// ---------------------------------------------------------------------------
// Robber update

struct RobberUpdate {
  TeamRecord memory;
  std::string case_tag;  // unchanged, new-history, reassign
};

// `before` is the memory before the cops' last announcement, `tag` that
// announcement's case; together they back the reachability assertion on
// robbers assigned to the longest history.
inline RobberUpdate robber_update_multiply(const Digraph& g, const CopTurn& pos_before, VertexSet announced,
                                           VertexSet next_robbers, const TeamRecord& z, const TeamRecord& before,
                                           const std::string& tag) {
  RobberUpdate out;
  out.memory = z;
  const DerivedSets d = derive(z, pos_before.robbers);
  const int s = d.s;
  const int last = s - 1;

  const RobberTurn mv{pos_before.cops, announced, pos_before.robbers};
  const CopTurn answer{announced, next_robbers};
  if (!is_legal_answer(g, static_cast<int>(VertexSet::kMaxVertices), mv, answer))
    throw PreconditionError("adversary contract: illegal robber move " + to_string(answer));
  if (!is_prudent(g, mv, next_robbers))
    throw PreconditionError("adversary contract: robber move to " + to_string(next_robbers) + " is not prudent");
  if (!is_isolating(g, answer))
    throw PreconditionError("adversary contract: robbers " + to_string(next_robbers) + " are not isolating");

  if (next_robbers == pos_before.robbers && d.last_cop_turn) {
    out.case_tag = "unchanged";
    return out;
  }

  std::vector<VertexSet> assigned(s);
  for (Vertex b : next_robbers) {
    int slot = last;
    for (int j = 0; j < last; ++j)
      if (z.entries[j].omitted.contains(b)) {
        slot = j;
        break;
      }
    assigned[slot].insert(b);
  }
  const VertexSet fresh = assigned[last];

  if (tag != "resume-previous" && tag != "resume-waiting-robber" && tag != "drop-idle-history") {
    detail::HistoryTail bt = detail::tail(before.last);
    VertexSet area = reach_excluding(g, bt.cops, bt.robber);
    if (!fresh.subset_of(area))
      throw InvariantViolation("new-robbers-reachable", "robbers " + to_string(fresh - area) +
                                                             " not reachable from the previous longest robber");
  }
  if (d.last_cop_turn && !fresh.subset_of(VertexSet::single(d.robber[last])))
    throw InvariantViolation("cop-ended-history-single-robber",
                             "robbers " + to_string(fresh) + " assigned to a history ending in a cop turn");

  for (int j = 0; j < last; ++j) out.memory.entries[j].robbers = assigned[j];
  if (!d.last_cop_turn && !fresh.empty()) {
    const Vertex b = fresh.front();
    const VertexSet rest = fresh - VertexSet::single(b);
    // A history left without robbers is dropped right away instead of
    // costing the cops an idle round later.
    if (!rest.empty()) out.memory.entries.push_back({z.last, rest, reach_excluding(g, d.cops[last], rest)});
    out.memory.last = detail::extend(z.last, CopTurn{d.cops[last], VertexSet::single(b)});
    out.case_tag = "new-history";
  } else {
    out.case_tag = "reassign";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Packaged strategy

struct TeamMemory {
  TeamRecord record;       // after the cops' latest announcement
  TeamRecord before;     // before it (after the robbers' update)
  CopTurn position;      // where it was made
  VertexSet announced;
  std::string case_tag;
  std::string robber_case;
};

struct TeamStepHook {
  // Called after every announcement with the full memory record.
  std::function<void(const TeamMemory&, const InvariantReport& entry, const InvariantReport& exit)> on_step;
};

inline void throw_if_failed(const InvariantReport& rep, const std::string& where) {
  if (!rep.ok) throw InvariantViolation(rep.name, where + ": " + rep.witness);
}

// One announcement including all runtime assertions.
inline TeamMemory team_step(const Digraph& g, const PositionalCopStrategy& f, int r, const CopTurn& pos,
                            const TeamRecord& record, const TeamStepHook* hook = nullptr,
                            std::string robber_case = "") {
  TeamMemory m;
  m.robber_case = std::move(robber_case);
  m.before = record;
  m.position = pos;
  InvariantReport entry = check_invariants(g, f, Phase::CopTurn, pos.cops, pos.robbers, record, r);
  throw_if_failed(entry, "at " + to_string(pos));
  CopDecision dec = cop_move_multiply(g, f, pos, record);
  m.record = dec.memory;
  m.announced = dec.announced;
  m.case_tag = dec.case_tag;
  InvariantReport exit;
  if (dec.case_tag != "won") {
    const RobberTurn mv{pos.cops, dec.announced, pos.robbers};
    if (!is_monotone_move(g, mv))
      throw InvariantViolation("monotone-move", "case " + dec.case_tag + " lifts " +
                                                    to_string((pos.cops - dec.announced) & robber_reach(g, mv)));
    if (dec.announced.size() > r * f.k)
      throw InvariantViolation("cop-bound", "case " + dec.case_tag + " uses " + std::to_string(dec.announced.size()) +
                                                " cops");
    exit = check_invariants(g, f, Phase::AfterAnnounce, dec.announced, pos.robbers, dec.memory, r);
    throw_if_failed(exit, "after case " + dec.case_tag + " at " + to_string(pos));
  }
  if (hook && hook->on_step) hook->on_step(m, entry, exit);
  return m;
}

inline std::string memory_key(const TeamRecord& z) {
  std::string out;
  for (const auto& e : z.entries)
    out += std::to_string(e.history.size()) + ":" + std::to_string(e.robbers.bits()) + ":" +
           std::to_string(e.omitted.bits()) + ";";
  auto hist = [&](const History& h) {
    for (const auto& p : h) {
      if (auto* c = std::get_if<CopTurn>(&p))
        out += "c" + std::to_string(c->cops.bits()) + "." + std::to_string(c->robbers.bits());
      else if (auto* m = std::get_if<RobberTurn>(&p))
        out += "r" + std::to_string(m->announced.bits()) + "." + std::to_string(m->robbers.bits());
    }
    out += "|";
  };
  // Histories are prefix-ordered, so the longest one plus the lengths
  // above determine all of them.
  hist(z.last);
  return out;
}

// The team strategy as a memory strategy with r * k cops. The input f must
// already be in cleanup normal form.
inline CopStrategy multiply_strategy_normalized(const Digraph& g, const PositionalCopStrategy& f, int r,
                                                std::shared_ptr<const TeamStepHook> hook = nullptr) {
  if (r < 1) throw ConfigError("r must be >= 1");
  if (!is_strongly_connected(g)) throw PreconditionError("team strategy needs a strongly connected graph");
  auto graph = std::make_shared<const Digraph>(g);
  auto strat = std::make_shared<const PositionalCopStrategy>(f);
  typename MemoryCopAgent<TeamMemory>::Spec spec;
  spec.init = [graph, strat, r, hook](const CopTurn& pos) {
    return team_step(*graph, *strat, r, pos, init_memory(*graph, pos.robbers), hook.get());
  };
  spec.update = [graph, strat, r, hook](const TeamMemory& m, const CopTurn& pos) {
    if (pos.cops != m.announced) throw PreconditionError("cops are not where they were announced");
    RobberUpdate up = robber_update_multiply(*graph, m.position, m.announced, pos.robbers, m.record, m.before, m.case_tag);
    return team_step(*graph, *strat, r, pos, up.memory, hook.get(), up.case_tag);
  };
  spec.move = [](const TeamMemory& m, const CopTurn&) { return m.announced; };
  spec.key = [](const TeamMemory& m) { return memory_key(m.before); };
  return memory_strategy<TeamMemory>(std::move(spec), r * f.k, "team");
}

// Cleans f up and multiplies it.
inline CopStrategy multiply_strategy(const Digraph& g, const PositionalCopStrategy& f, int r) {
  return multiply_strategy_normalized(g, cleanup_strategy(g, f), r);
}

// Robber filter for the adversaries the team strategy is built against.
inline CopCheckOptions prudent_isolating_adversary(const Digraph& g, int r, int cop_bound) {
  auto graph = std::make_shared<const Digraph>(g);
  CopCheckOptions o;
  o.r = r;
  o.k = cop_bound;
  o.initial_filter = [graph](const CopTurn& p) { return is_isolating(*graph, p); };
  o.answer_filter = [graph](const RobberTurn& mv, const CopTurn& a) {
    return is_prudent(*graph, mv, a.robbers) && is_isolating(*graph, a);
  };
  return o;
}

}  // namespace pw
