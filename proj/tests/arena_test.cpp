#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pursuitwidth/arena.hpp"

using namespace pw;

namespace {

Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph single() { return Digraph(1); }

SearchConfig config(int k, int r = 1) {
  SearchConfig c;
  c.k = k;
  c.r = r;
  return c;
}

}  // namespace

TEST(CopMoves, SingleVertexOneCop) {
  auto moves = cop_moves(single(), config(1), CopTurn{{}, VertexSet{0}});
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0].announced, VertexSet{});
  EXPECT_EQ(moves[1].announced, VertexSet{0});
}

TEST(CopMoves, SubsetCountOnCycle) {
  EXPECT_EQ(cop_moves(cycle3(), config(2), CopTurn{{}, VertexSet{0}}).size(), 7u);
}

TEST(CopMoves, SccRestrictionNeedsSingleRobber) {
  SearchConfig c = config(1, 2);
  c.restrict_to_scc = true;
  EXPECT_THROW(cop_moves(cycle3(), c, CopTurn{{}, VertexSet{0}}), ConfigError);
}

TEST(CopMoves, SccRestrictionStaysInComponent) {
  // 0 <-> 1 -> 2 <-> 3: robber on 2 sees the component {2,3}.
  Digraph g(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  SearchConfig c = config(2);
  c.restrict_to_scc = true;
  for (const auto& m : cop_moves(g, c, CopTurn{{}, VertexSet{2}}))
    EXPECT_TRUE(m.announced.subset_of(VertexSet{2, 3}));
  c.scc_rule = SccRule::NewPlacements;
  for (const auto& m : cop_moves(g, c, CopTurn{VertexSet{1}, VertexSet{2}}))
    EXPECT_TRUE((m.announced - VertexSet{1}).subset_of(VertexSet{2, 3}));
}

TEST(RobberMoves, InitialPlacementsAreNonempty) {
  auto moves = initial_moves(cycle3(), config(1, 2));
  EXPECT_EQ(moves.size(), 6u);
  for (const auto& m : moves) {
    EXPECT_FALSE(m.robbers.empty());
    EXPECT_TRUE(m.cops.empty());
  }
}

TEST(RobberMoves, BlockedRobberStaysOrLeaves) {
  auto moves = robber_moves(cycle3(), config(1), RobberTurn{VertexSet{1}, VertexSet{1}, VertexSet{0}});
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0], (CopTurn{VertexSet{1}, VertexSet{}}));
  EXPECT_EQ(moves[1], (CopTurn{VertexSet{1}, VertexSet{0}}));
}

TEST(RobberMoves, EscapeAlongEdge) {
  auto moves = robber_moves(Digraph(2, {{0, 1}}), config(1), RobberTurn{{}, VertexSet{0}, VertexSet{0}});
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[1].robbers, VertexSet{1});
}

TEST(Monotone, Examples) {
  EXPECT_TRUE(is_monotone_move(cycle3(), RobberTurn{VertexSet{1}, VertexSet{1, 2}, VertexSet{0}}));
  EXPECT_FALSE(is_monotone_move(cycle3(), RobberTurn{VertexSet{1}, {}, VertexSet{0}}));
  Digraph g(3, {{0, 2}});
  EXPECT_TRUE(is_monotone_move(g, RobberTurn{VertexSet{1}, VertexSet{2}, VertexSet{0}}));
}

TEST(Solve, SingleVertex) {
  EXPECT_EQ(solve_search(single(), config(1)).winner, Winner::Cops);
}

TEST(Solve, CycleNeedsTwoCops) {
  EXPECT_EQ(solve_search(cycle3(), config(1)).winner, Winner::Robbers);
  SolveResult two = solve_search(cycle3(), config(2));
  EXPECT_EQ(two.winner, Winner::Cops);
  EXPECT_FALSE(two.cop_strategy.empty());
  EXPECT_EQ(width(cycle3(), Measure::DagWidth), 2);
}

TEST(Solve, BudgetIsEnforced) {
  SearchConfig c = config(2);
  c.budget = 5;
  try {
    solve_search(cycle3(), c);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.bound(), 5u);
    EXPECT_EQ(e.at_k(), 2);
  }
}

TEST(Solve, MatchesExplicitFixpointOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    Digraph g = oracle::random_digraph(n, 0.45, seed + 500);
    for (int r = 1; r <= 2; ++r)
      for (int k = 1; k <= n; ++k) {
        bool expect = oracle::cops_win_explicit(g, k, r);
        ASSERT_EQ(solve_search(g, config(k, r)).winner == Winner::Cops, expect)
            << "seed " << seed << " k " << k << " r " << r << "\n" << emit_edge_list(g);
      }
  }
}

TEST(Solve, PruningDoesNotChangeWinner) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph g = oracle::random_digraph(5, 0.35, seed + 77);
    for (int r = 1; r <= 3; ++r)
      for (int k = 1; k <= 4; ++k) {
        SearchConfig a = config(k, r), b = config(k, r);
        b.prune_unreachable = false;
        ASSERT_EQ(SolvedArena(g, a).cops_win(), SolvedArena(g, b).cops_win()) << seed;
      }
  }
}

TEST(Solve, CopStrategyNeverLosesUnderExhaustivePlay) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = oracle::random_digraph(5, 0.4, seed + 31);
    for (int r = 1; r <= 2; ++r) {
      SearchConfig c = config(cop_number(g, r), r);
      SolveResult res = solve_search(g, c);
      ASSERT_EQ(res.winner, Winner::Cops);
      // Every stored move is monotone, within budget, and ranks strictly decrease.
      for (const auto& [pos, next] : res.cop_strategy) {
        RobberTurn mv{pos.cops, next, pos.robbers};
        ASSERT_TRUE(is_monotone_move(g, mv));
        ASSERT_LE(next.size(), c.k);
        for (const CopTurn& q : robber_moves(g, c, mv)) {
          if (q.robbers.empty()) continue;
          ASSERT_LT(res.arena->rank(q), res.arena->rank(pos));
          ASSERT_TRUE(res.cop_strategy.count(q));
        }
      }
    }
  }
}

TEST(Solve, DeterminacyOfOpeningPositions) {
  // Exactly one side wins each opening: cops via a rank, robbers via an
  // answer to every announcement that keeps them outside the ranked set.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Digraph g = oracle::random_digraph(4, 0.5, seed + 3);
    SearchConfig c = config(1, 2);
    SolvedArena a(g, c);
    for (const CopTurn& p : initial_moves(g, c)) {
      if (a.cops_win(p)) continue;
      for (const RobberTurn& mv : cop_moves(g, c, p)) {
        if (!is_monotone_move(g, mv)) continue;
        EXPECT_FALSE(a.cops_win(a.robber_move(mv)));
      }
    }
  }
}

TEST(Invisible, SingleVertex) { EXPECT_TRUE(solve_invisible(single(), 1).cops_win); }

TEST(Invisible, SymmetricStar) {
  Digraph star = symmetric_closure(Digraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_FALSE(solve_invisible(star, 1).cops_win);
  InvisibleResult two = solve_invisible(star, 2);
  ASSERT_TRUE(two.cops_win);
  EXPECT_EQ(check_clearing_schedule(star, two.placements, 2), "");
  EXPECT_EQ(width(star, Measure::PathWidth), 2);
}

TEST(Invisible, ScheduleCheckerRejectsRecontamination) {
  EXPECT_NE(check_clearing_schedule(cycle3(), {VertexSet{0}, VertexSet{}}, 1), "");
  EXPECT_EQ(check_clearing_schedule(cycle3(), {VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{}}, 2),
            "");
}

TEST(Width, VisibleAllRobbersEqualsInvisible) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    Digraph g = oracle::random_digraph(n, 0.4, seed + 11);
    EXPECT_EQ(width(g, Measure::DwR, n), width(g, Measure::PathWidth)) << emit_edge_list(g);
  }
}

TEST(Width, TreeWidthOfCycleClosure) {
  EXPECT_EQ(width(cycle3(), Measure::TwR, 1), 3);
  EXPECT_EQ(width(cycle3(), Measure::TreeWidth), 2);
  EXPECT_THROW(parse_measure("pw"), ConfigError);
}
