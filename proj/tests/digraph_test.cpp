#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pursuitwidth/digraph.hpp"

using namespace pw;

namespace {

Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST(Reach, WholeCycleReachable) {
  EXPECT_EQ(reach_excluding(cycle3(), {}, VertexSet{0}), (VertexSet{0, 1, 2}));
}

TEST(Reach, BlockedOutgoingEdge) {
  EXPECT_EQ(reach_excluding(cycle3(), VertexSet{1}, VertexSet{0}), (VertexSet{0}));
}

TEST(Reach, StartInsideExcludedSetIsDropped) {
  EXPECT_EQ(reach_excluding(cycle3(), VertexSet{0}, VertexSet{0}), VertexSet{});
}

TEST(Reach, OutOfRangeVertexIsInputError) {
  EXPECT_THROW(reach_excluding(cycle3(), {}, VertexSet{5}), InputError);
  EXPECT_THROW(reach_excluding(cycle3(), VertexSet{3}, VertexSet{0}), InputError);
}

TEST(Reach, MatchesSimplePathEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Digraph g = oracle::random_digraph(6, 0.3, seed, true);
    for (std::uint64_t x = 0; x < 64; x += 5)
      for (std::uint64_t y = 1; y < 64; y += 7) {
        VertexSet X(x), Y(y);
        VertexSet got = reach_excluding(g, X, Y);
        ASSERT_EQ(got, oracle::path_reach(g, X, Y)) << "seed " << seed;
        ASSERT_FALSE(got.intersects(X));
        ASSERT_TRUE((Y - X).subset_of(got));
      }
  }
}

TEST(Reach, EmptyExclusionIsPlainReachability) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    Digraph g = oracle::random_digraph(n, 0.25, seed + 1000);
    auto c = oracle::closure(g);
    for (Vertex v = 0; v < n; ++v) {
      VertexSet expect;
      for (Vertex w = 0; w < n; ++w)
        if (c[v][w]) expect.insert(w);
      ASSERT_EQ(reach_excluding(g, {}, VertexSet::single(v)), expect);
    }
  }
}

TEST(Reach, MonotoneInSourcesAntitoneInExclusion) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Digraph g = oracle::random_digraph(7, 0.25, seed + 7);
    for (std::uint64_t a = 0; a < 128; a += 11)
      for (std::uint64_t b = 0; b < 128; b += 13) {
        VertexSet small(a & b), big(a);
        VertexSet x = VertexSet(b) - big;
        EXPECT_TRUE(reach_excluding(g, x, small).subset_of(reach_excluding(g, x, big)));
        VertexSet xs(a & 0x55), xb(a);
        EXPECT_TRUE(reach_excluding(g, xb, VertexSet(b)).subset_of(reach_excluding(g, xs, VertexSet(b))));
      }
  }
}

TEST(Scc, CycleIsOneBlock) {
  SccPartition p = sccs(cycle3());
  ASSERT_EQ(p.count(), 1);
  EXPECT_EQ(p.block_of(2), (VertexSet{0, 1, 2}));
}

TEST(Scc, SingleEdgeGivesTwoBlocksInTopologicalOrder) {
  SccPartition p = sccs(Digraph(2, {{0, 1}}));
  ASSERT_EQ(p.count(), 2);
  EXPECT_EQ(p.blocks[0], VertexSet{0});
  EXPECT_EQ(p.blocks[1], VertexSet{1});
}

TEST(Scc, MatchesMutualReachabilityOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Digraph g = oracle::random_digraph(8, 0.2, seed + 99);
    auto c = oracle::closure(g);
    SccPartition p = sccs(g);
    for (Vertex v = 0; v < 8; ++v) {
      VertexSet expect;
      for (Vertex w = 0; w < 8; ++w)
        if (c[v][w] && c[w][v]) expect.insert(w);
      ASSERT_EQ(p.block_of(v), expect) << "seed " << seed;
      ASSERT_EQ(scc_of(g, {}, v), expect);
    }
    // Blocks are ordered topologically and never mutually reachable.
    for (int i = 0; i < p.count(); ++i)
      for (int j = i + 1; j < p.count(); ++j) {
        Vertex a = p.blocks[i].front(), b = p.blocks[j].front();
        ASSERT_FALSE(c[b][a]);
      }
  }
}

TEST(Scc, RespectsRemovedVertices) {
  SccPartition p = sccs(cycle3(), VertexSet{1});
  EXPECT_EQ(p.count(), 2);
  EXPECT_EQ(p.block_index[1], -1);
}

TEST(SymmetricClosure, AddsReverseEdges) {
  Digraph s = symmetric_closure(Digraph(2, {{0, 1}}));
  EXPECT_TRUE(s.has_edge(0, 1));
  EXPECT_TRUE(s.has_edge(1, 0));
  EXPECT_EQ(s.edge_count(), 2);
  EXPECT_EQ(symmetric_closure(cycle3()).edge_count(), 6);
}

TEST(SymmetricClosure, Idempotent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = oracle::random_digraph(6, 0.3, seed);
    Digraph s = symmetric_closure(g);
    EXPECT_EQ(symmetric_closure(s), s);
    EXPECT_TRUE(is_symmetric(s));
  }
}

TEST(EdgeList, ParsesCycle) { EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n2 0\n"), cycle3()); }

TEST(EdgeList, CommentsAndBlankLines) {
  EXPECT_EQ(parse_edge_list("# triangle\n\n3  # count\n0 1\n\n1 2 # edge\n2 0\n"), cycle3());
}

TEST(EdgeList, RoundTripIsCanonical) {
  std::string messy = "3\n2 0\n0 1\n1 2\n0 1\n";
  std::string canon = emit_edge_list(parse_edge_list(messy));
  EXPECT_EQ(canon, "3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(emit_edge_list(parse_edge_list(canon)), canon);
}

TEST(EdgeList, VertexAboveCountNamesLine) {
  try {
    parse_edge_list("3\n2 5\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(EdgeList, MalformedLines) {
  EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), InputError);
  EXPECT_THROW(parse_edge_list("3\n0 x\n"), InputError);
  EXPECT_THROW(parse_edge_list("# nothing\n"), InputError);
  EXPECT_THROW(parse_edge_list("65\n"), InputError);
}

TEST(EdgeList, DotOutput) {
  std::string dot = emit_dot(cycle3());
  EXPECT_NE(dot.find("2 -> 0;"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Digraph, SelfLoopsAllowedAndDuplicatesCollapse) {
  Digraph g(2, {{0, 0}, {0, 1}, {0, 1}});
  EXPECT_TRUE(g.has_edge(0, 0));
  EXPECT_EQ(g.edge_count(), 2);
}
