#pragma once

// Independent reference implementations used only by the tests. They
// deliberately avoid the library's algorithms (bit-parallel BFS, Tarjan,
// rank fixpoint) in favour of the most literal formulation available.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pursuitwidth/digraph.hpp"
#include "pursuitwidth/parity.hpp"

namespace oracle {

using pw::Digraph;
using pw::Vertex;
using pw::VertexSet;

inline Digraph random_digraph(int n, double p, std::uint64_t seed, bool loops = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<pw::Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if ((u != v || loops) && coin(rng) < p) es.emplace_back(u, v);
  return Digraph(n, es);
}

// All vertices that end some simple path starting in `from` and avoiding
// `excluded`, by explicit depth-first enumeration of simple paths.
inline VertexSet path_reach(const Digraph& g, VertexSet excluded, VertexSet from) {
  VertexSet found;
  std::vector<bool> on_path(g.size(), false);
  std::function<void(Vertex)> extend = [&](Vertex v) {
    found.insert(v);
    on_path[v] = true;
    for (Vertex w = 0; w < g.size(); ++w)
      if (g.has_edge(v, w) && !on_path[w] && !excluded.contains(w)) extend(w);
    on_path[v] = false;
  };
  for (Vertex v : from)
    if (!excluded.contains(v)) extend(v);
  return found;
}

// Boolean transitive closure (Floyd-Warshall style), reflexive.
inline std::vector<std::vector<bool>> closure(const Digraph& g) {
  const int n = g.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    c[i][i] = true;
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j)) c[i][j] = true;
  }
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c[i][m] && c[m][j]) c[i][j] = true;
  return c;
}

}  // namespace oracle

namespace oracle {

// Least fixpoint over the explicit position graph: every announcement
// (no pruning) and every robber answer (no maximality shortcut).
// Returns whether k cops beat r visible robbers monotonously.
inline bool cops_win_explicit(const Digraph& g, int k, int r) {
  const int n = g.size();
  const std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  auto subsets = [&](int maxsize) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s <= full; ++s)
      if (__builtin_popcountll(s) <= maxsize) out.push_back(s);
    return out;
  };
  const auto us = subsets(k);
  const auto rs = subsets(r);
  std::set<std::pair<std::uint64_t, std::uint64_t>> win;  // cop positions
  for (auto u : us) win.insert({u, 0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto u : us)
      for (auto rr : rs) {
        if (rr == 0 || (u & rr) || win.count({u, rr})) continue;
        for (auto next : us) {
          VertexSet reach = path_reach(g, VertexSet(u & next), VertexSet(rr));
          if (reach.bits() & (u & ~next)) continue;  // lifts a reachable cop
          bool all = true;
          for (auto answer : rs)
            if ((answer & ~reach.bits()) == 0 && !(answer & next) && !win.count({next, answer})) {
              all = false;
              break;
            }
          if (all) {
            win.insert({u, rr});
            changed = true;
            break;
          }
        }
      }
  }
  for (auto rr : rs)
    if (rr != 0 && !win.count({0, rr})) return false;
  return true;
}

}  // namespace oracle

namespace oracle {

// Positions from which player 0 wins, by trying every positional choice of
// action and checking the remaining one-player graph with a transitive
// closure per odd color.
inline std::vector<bool> parity_win0(const pw::ParityGame& pg) {
  const int n = pg.size();
  std::vector<std::vector<int>> options(n);
  for (int v = 0; v < n; ++v) {
    if (pg.owner[v] == 0)
      for (int a = 0; a < static_cast<int>(pg.actions.size()); ++a)
        if (!pg.post(v, a).empty()) options[v].push_back(a);
    if (options[v].empty()) options[v].push_back(-1);
  }
  std::vector<bool> win(n, false);
  std::vector<int> pick(n, 0);
  while (true) {
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) {
      VertexSet to = pg.owner[v] == 0 ? pg.post(v, options[v][pick[v]]) : pg.post(v);
      for (Vertex w : to) edge[v][w] = true;
    }
    auto closure = [&](int floor) {
      std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) c[u][w] = edge[u][w] && pg.color[u] >= floor && pg.color[w] >= floor;
      for (int m = 0; m < n; ++m)
        for (int u = 0; u < n; ++u)
          for (int w = 0; w < n; ++w)
            if (c[u][m] && c[m][w]) c[u][w] = true;
      return c;
    };
    std::vector<std::vector<bool>> any = closure(0);
    for (int u = 0; u < n; ++u) any[u][u] = true;
    std::vector<bool> bad(n, false);
    for (int u = 0; u < n; ++u) {
      if (pg.color[u] % 2 == 0) continue;
      if (!closure(pg.color[u])[u][u]) continue;
      for (int v = 0; v < n; ++v)
        if (any[v][u]) bad[v] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!bad[v]) win[v] = true;
    int i = 0;
    while (i < n && ++pick[i] == static_cast<int>(options[i].size())) pick[i++] = 0;
    if (i == n) break;
  }
  return win;
}

}  // namespace oracle
