#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pursuitwidth/families.hpp"
#include "pursuitwidth/strategy.hpp"

using namespace pw;

namespace {

VertexSet V(std::initializer_list<int> l) { return VertexSet::from_range(std::vector<int>(l)); }

PositionalCopStrategy solved_cops(const Digraph& g, int k) {
  SearchConfig cfg;
  cfg.k = k;
  return solver_cop_strategy(solve_search(g, cfg));
}

RobberStrategy stay_or_first(VertexSet start) {
  auto agent = std::make_shared<FunctionRobberAgent>(
      [start] { return CopTurn{{}, start}; },
      [](const RobberTurn& mv) { return CopTurn{mv.announced, mv.robbers - mv.announced}; });
  return RobberStrategy(agent, 1, "stay");
}

std::vector<Digraph> strongly_connected_sample(int count, std::uint64_t seed) {
  std::vector<Digraph> out;
  for (std::uint64_t s = seed; static_cast<int>(out.size()) < count; ++s) {
    Digraph g = oracle::random_digraph(3 + static_cast<int>(s % 3), 0.45, s);
    if (is_strongly_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Playout, SingleVertexOneCop) {
  Digraph g(1, {});
  SearchConfig cfg;
  PlayResult res = playout(g, cfg, as_strategy(solved_cops(g, 1)), stay_or_first(VertexSet::single(0)));
  EXPECT_EQ(res.verdict, Verdict::CopsWin);
  EXPECT_EQ(res.trace.size(), 4u);
}

TEST(Playout, LiftingAReachableCopIsNonMonotone) {
  Digraph g(2, {{0, 1}, {1, 0}});
  PositionalCopStrategy f;
  f.k = 1;
  f.moves[{VertexSet{}, VertexSet::single(0)}] = VertexSet::single(1);
  f.moves[{VertexSet::single(1), VertexSet::single(0)}] = VertexSet::single(0);
  SearchConfig cfg;
  PlayResult res = playout(g, cfg, as_strategy(f), stay_or_first(VertexSet::single(0)));
  EXPECT_EQ(res.verdict, Verdict::NonMonotone);
  StrategyCheck chk = verify_cop_strategy(g, as_strategy(f), single_robber_check(1));
  EXPECT_FALSE(chk.ok);
}

TEST(Playout, IdlingCopsLose) {
  Digraph g(2, {{0, 1}, {1, 0}});
  PositionalCopStrategy f;
  f.k = 1;
  f.moves[{VertexSet{}, VertexSet::single(0)}] = VertexSet{};
  SearchConfig cfg;
  PlayResult res = playout(g, cfg, as_strategy(f), stay_or_first(VertexSet::single(0)));
  EXPECT_EQ(res.verdict, Verdict::RobbersWin);
}

TEST(VerifyCops, SolverStrategiesPassAtTheCopNumber) {
  for (const Digraph& g : strongly_connected_sample(15, 100)) {
    int k = cop_number(g, 1);
    StrategyCheck chk = verify_cop_strategy(g, as_strategy(solved_cops(g, k)), single_robber_check(k));
    EXPECT_TRUE(chk.ok) << chk.failure << " on " << emit_edge_list(g);
    EXPECT_LE(chk.max_cops, k);
    EXPECT_FALSE(chk.sample.empty());
  }
}

TEST(VerifyCops, NoRandomOneCopStrategyWinsOnTriangle) {
  Digraph g = directed_cycle(3);
  SearchConfig cfg;
  auto arena = std::make_shared<const SolvedArena>(g, cfg);
  ASSERT_FALSE(arena->cops_win());
  RobberStrategy robbers = solver_robber_strategy(arena);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    PositionalCopStrategy f;
    f.k = 1;
    for (int u = 0; u <= 3; ++u)
      for (Vertex v = 0; v < 3; ++v) {
        VertexSet cops = u == 3 ? VertexSet{} : VertexSet::single(u);
        int pick = static_cast<int>(rng() % 4);
        f.moves[{cops, VertexSet::single(v)}] = pick == 3 ? VertexSet{} : VertexSet::single(pick);
      }
    EXPECT_FALSE(verify_cop_strategy(g, as_strategy(f), single_robber_check(1)).ok);
    PlayResult res = playout(g, cfg, as_strategy(f), robbers);
    EXPECT_NE(res.verdict, Verdict::CopsWin);
  }
}

TEST(RobberConditions, IsolatingAndPrudent) {
  Digraph g = directed_cycle(4);
  EXPECT_FALSE(is_isolating(g, {VertexSet{}, V({0, 2})}));
  EXPECT_TRUE(is_isolating(g, {V({1, 3}), V({0, 2})}));
  EXPECT_FALSE(is_isolating(g, {VertexSet::single(3), V({0, 2})}));
  RobberTurn mv{VertexSet{}, VertexSet::single(2), VertexSet::single(0)};
  EXPECT_TRUE(is_prudent(g, mv, VertexSet::single(0)));
  EXPECT_FALSE(is_prudent(g, mv, VertexSet::single(1)));
  EXPECT_TRUE(is_prudent(g, mv, VertexSet{}));
}

TEST(SourceRepresentatives, OnePerSourceComponent) {
  // 0 <-> 1 -> 2 <-> 3, 4 isolated
  Digraph g(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  EXPECT_EQ(source_representatives(g, {}, V({0, 1, 3, 4})), V({0, 4}));
  EXPECT_EQ(source_representatives(g, VertexSet::single(1), V({0, 3})),
            V({0, 3}));
}

TEST(NormalForms, TransformsKeepWinningAndObeyConditions) {
  int tried = 0;
  for (const Digraph& g : strongly_connected_sample(20, 500)) {
    for (int r = 1; r <= 2; ++r) {
      int k = cop_number(g, r) - 1;
      if (k < 1) continue;
      SearchConfig cfg;
      cfg.k = k;
      cfg.r = r;
      auto arena = std::make_shared<const SolvedArena>(g, cfg);
      ASSERT_FALSE(arena->cops_win());
      RobberStrategy base = solver_robber_strategy(arena);
      ++tried;

      RobberStrategy iso = isolating_transform(g, cfg, base);
      RobberCheckOptions iso_opt;
      iso_opt.step_check = [&](const std::optional<RobberTurn>&, const CopTurn& to) {
        return isolating_step_error(g, to);
      };
      RobberCheck a = cop_search_vs_robber(g, cfg, iso, iso_opt);
      EXPECT_TRUE(a.conditions_ok) << a.failure;
      EXPECT_TRUE(a.robbers_win) << a.failure << " " << describe(a.witness);

      RobberStrategy pru = prudent_transform(g, cfg, base);
      RobberCheckOptions pru_opt;
      pru_opt.step_check = [&](const std::optional<RobberTurn>& from, const CopTurn& to) {
        std::string e = isolating_step_error(g, to);
        return e.empty() ? prudent_step_error(g, from, to) : e;
      };
      RobberCheck b = cop_search_vs_robber(g, cfg, pru, pru_opt);
      EXPECT_TRUE(b.conditions_ok) << b.failure;
      EXPECT_TRUE(b.robbers_win) << b.failure << " " << describe(b.witness);
    }
  }
  EXPECT_GT(tried, 5);
}

TEST(NormalForms, RejectsLosingRobberStrategy) {
  Digraph g(1, {});
  SearchConfig cfg;
  EXPECT_THROW(isolating_transform(g, cfg, stay_or_first(VertexSet::single(0))), PreconditionError);
}

TEST(Cleanup, TriangleTwoCops) {
  Digraph g = directed_cycle(3);
  PositionalCopStrategy f = solved_cops(g, 2);
  PositionalCopStrategy c = cleanup_strategy(g, f);
  EXPECT_EQ(cleanup_contract_error(g, c), "");
  EXPECT_TRUE(verify_cop_strategy(g, as_strategy(c), single_robber_check(2)).ok);
}

TEST(Cleanup, RandomGraphsAndIdempotence) {
  for (const Digraph& g : strongly_connected_sample(20, 900)) {
    int k = cop_number(g, 1);
    PositionalCopStrategy c = cleanup_strategy(g, solved_cops(g, k));
    EXPECT_EQ(cleanup_contract_error(g, c), "") << emit_edge_list(g);
    StrategyCheck chk = verify_cop_strategy(g, as_strategy(c), single_robber_check(k));
    EXPECT_TRUE(chk.ok) << chk.failure;
    PositionalCopStrategy again = cleanup_strategy(g, c);
    EXPECT_EQ(again.moves, c.moves);
  }
}

TEST(Cleanup, DropsCopParkedOutOfReach) {
  // 0 <-> 1, 2 -> 0; vertex 2 is out of reach from 0 and 1.
  Digraph g(3, {{0, 1}, {1, 0}, {2, 0}});
  PositionalCopStrategy f;
  f.k = 2;
  f.moves[{V({}), V({0})}] = V({2});
  f.moves[{V({}), V({1})}] = V({2});
  f.moves[{V({}), V({2})}] = V({2});
  f.moves[{V({2}), V({0})}] = V({0, 2});
  f.moves[{V({2}), V({1})}] = V({0, 2});
  f.moves[{V({0, 2}), V({1})}] = V({0, 1});
  ASSERT_TRUE(verify_cop_strategy(g, as_strategy(f), single_robber_check(2)).ok);
  PositionalCopStrategy c = cleanup_strategy(g, f);
  EXPECT_EQ(c.at({V({}), V({0})}), V({0}));
  EXPECT_EQ(c.at({V({}), V({2})}), V({2}));
  EXPECT_EQ(cleanup_contract_error(g, c), "");
  StrategyCheck chk = verify_cop_strategy(g, as_strategy(c), single_robber_check(2));
  EXPECT_TRUE(chk.ok) << chk.failure;
  EXPECT_EQ(chk.max_cops, 2);
}

TEST(Cleanup, RejectsLosingStrategy) {
  Digraph g = directed_cycle(3);
  PositionalCopStrategy f;
  f.k = 1;
  for (Vertex v = 0; v < 3; ++v) f.moves[{VertexSet{}, VertexSet::single(v)}] = VertexSet::single(v);
  EXPECT_THROW(cleanup_strategy(g, f), PreconditionError);
}

TEST(StrategyText, RoundTrip) {
  Digraph g = directed_cycle(3);
  PositionalCopStrategy f = solved_cops(g, 2);
  std::string text = write_strategy(f);
  PositionalCopStrategy back = parse_strategy(text, 2);
  EXPECT_EQ(back.moves, f.moves);
  EXPECT_EQ(write_strategy(back), text);
  EXPECT_THROW(parse_strategy("1 ; 2 3\n", 1), InputError);
  EXPECT_THROW(parse_strategy("x ; 2 -> 3\n", 1), InputError);
}
