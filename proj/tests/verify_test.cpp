#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pursuitwidth/verify.hpp"

using namespace pw;

namespace {

VerifyParams small() {
  VerifyParams p;
  p.corpus.nmax = 3;
  p.corpus.random_count = 5;
  p.parity_games = 20;
  p.jobs = 2;
  return p;
}

}  // namespace

TEST(Corpus, StronglyConnectedClassCounts) {
  EXPECT_EQ(strongly_connected_classes(1).size(), 1u);
  EXPECT_EQ(strongly_connected_classes(2).size(), 1u);
  EXPECT_EQ(strongly_connected_classes(3).size(), 5u);
  EXPECT_EQ(strongly_connected_classes(4).size(), 83u);
}

TEST(Corpus, RepresentativesArePairwiseNonIsomorphic) {
  std::vector<Digraph> cls = strongly_connected_classes(3);
  // Every labelled strongly connected digraph on 3 vertices is isomorphic
  // to exactly one representative, checked by brute-force relabelling.
  std::vector<int> hits(cls.size(), 0);
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (Vertex u = 0; u < 3; ++u)
      for (Vertex v = 0; v < 3; ++v)
        if (u != v && (mask >> bit++ & 1)) es.emplace_back(u, v);
    Digraph g(3, es);
    if (!is_strongly_connected(g)) continue;
    int matches = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      std::vector<int> perm{0, 1, 2};
      bool iso = false;
      do {
        bool same = g.edge_count() == cls[i].edge_count();
        for (auto [u, v] : g.edges()) same = same && cls[i].has_edge(perm[u], perm[v]);
        iso = iso || same;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (iso) {
        ++matches;
        ++hits[i];
      }
    }
    EXPECT_EQ(matches, 1);
  }
  for (int h : hits) EXPECT_GT(h, 0);
}

TEST(Corpus, RandomPartIsSeededAndStronglyConnected) {
  CorpusParams p;
  p.random_count = 10;
  auto a = random_corpus(p), b = random_corpus(p);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graph.edges(), b[i].graph.edges());
    EXPECT_TRUE(is_strongly_connected(a[i].graph));
    EXPECT_EQ(a[i].graph.size(), 5);
  }
}

TEST(ParallelMap, KeepsOrderAndPropagatesErrors) {
  auto out = parallel_map<int>(4, 100, [](std::size_t i) { return static_cast<int>(i * i); });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_THROW(parallel_map<int>(3, 10,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw ConfigError("boom");
                                   return 0;
                                 }),
               ConfigError);
}

TEST(Suites, AllPassOnSmallParameters) {
  for (const std::string& name : suite_names()) {
    VerifyParams p = small();
    p.n = 1;
    SuiteReport rep = run_suite(name, p);
    EXPECT_TRUE(rep.ok()) << name << " failures=" << rep.failures();
    for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << name << " " << c.instance << ": " << c.detail;
  }
  EXPECT_THROW(run_suite("nope", small()), ConfigError);
}

TEST(Suites, HierarchyValuesMatchExplicitOracle) {
  VerifyParams p = small();
  p.corpus.random_count = 0;
  SuiteReport rep = verify_hierarchy(p);
  auto graphs = exhaustive_corpus(3);
  ASSERT_EQ(rep.checks.size(), graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    int d1 = static_cast<int>(rep.checks[i].values[0].second);
    EXPECT_TRUE(oracle::cops_win_explicit(graphs[i].graph, d1, 1));
    if (d1 > 1) {
      EXPECT_FALSE(oracle::cops_win_explicit(graphs[i].graph, d1 - 1, 1));
    }
  }
}

TEST(Suites, SingleGraphMode) {
  VerifyParams p = small();
  p.graph = NamedGraph{"c3", directed_cycle(3)};
  p.r = 2;
  SuiteReport rep = verify_multiply(p);
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_TRUE(rep.checks[0].ok) << rep.checks[0].detail;
  EXPECT_FALSE(rep.checks[0].witness.empty());
  p.graph = NamedGraph{"path", Digraph(2, {{0, 1}})};
  EXPECT_FALSE(verify_multiply(p).ok());
}
