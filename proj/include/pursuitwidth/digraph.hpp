#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace pw {

using Edge = std::pair<Vertex, Vertex>;

// Immutable digraph on vertices 0..n-1 with set semantics for edges.
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n, const std::vector<Edge>& edges = {},
                   std::vector<std::string> labels = {})
      : n_(n), out_(n), in_(n), labels_(std::move(labels)) {
    if (n < 0 || n > VertexSet::kMaxVertices)
      throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(VertexSet::kMaxVertices));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
      throw InputError("label count does not match vertex count");
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      out_[u].insert(v);
      in_[v].insert(u);
    }
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::prefix(n_); }
  VertexSet out(Vertex v) const { return out_[v]; }
  VertexSet in(Vertex v) const { return in_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return out_[u].contains(v); }

  int edge_count() const {
    int m = 0;
    for (const auto& s : out_) m += s.size();
    return m;
  }

  // Sorted by (source, target).
  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : out_[u]) es.emplace_back(u, v);
    return es;
  }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
  }
  void check_set(VertexSet s) const {
    if (!s.subset_of(vertices()))
      throw InputError("vertex set " + to_string(s) + " out of range for n=" +
                       std::to_string(n_));
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<std::string> labels_;
};

// Vertices reachable from Y by a path avoiding X. Y \ X is always included.
inline VertexSet reach_excluding(const Digraph& g, VertexSet excluded, VertexSet from) {
  g.check_set(excluded);
  g.check_set(from);
  VertexSet seen = from - excluded;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.out(v);
    next -= excluded;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline VertexSet reach_excluding(const Digraph& g, VertexSet excluded, Vertex from) {
  g.check_vertex(from);
  return reach_excluding(g, excluded, VertexSet::single(from));
}

// Vertices that reach Y by a path avoiding X.
inline VertexSet coreach_excluding(const Digraph& g, VertexSet excluded, VertexSet to) {
  g.check_set(excluded);
  g.check_set(to);
  VertexSet seen = to - excluded;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.in(v);
    next -= excluded;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Strongly connected component of v in G - removed (v must not be removed).
inline VertexSet scc_of(const Digraph& g, VertexSet removed, Vertex v) {
  return reach_excluding(g, removed, v) & coreach_excluding(g, removed, VertexSet::single(v));
}

struct SccPartition {
  // Blocks in topological order of the condensation: edges only go from a
  // block to a later one.
  std::vector<VertexSet> blocks;
  // block_index[v] is -1 for removed vertices.
  std::vector<int> block_index;

  VertexSet block_of(Vertex v) const { return blocks[block_index[v]]; }
  int count() const { return static_cast<int>(blocks.size()); }
};

// SCCs of G - removed (Tarjan).
inline SccPartition sccs(const Digraph& g, VertexSet removed = {}) {
  const int n = g.size();
  SccPartition part;
  part.block_index.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<Vertex> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;

  struct Frame {
    Vertex v;
    VertexSet pending;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (removed.contains(root) || index[root] >= 0) continue;
    std::vector<Frame> call;
    auto open = [&](Vertex v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      call.push_back({v, g.out(v) - removed});
    };
    open(root);
    while (!call.empty()) {
      Frame& fr = call.back();
      if (!fr.pending.empty()) {
        Vertex w = fr.pending.front();
        fr.pending.erase(w);
        if (index[w] < 0) {
          open(w);
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
        continue;
      }
      Vertex v = fr.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexSet block;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          block.insert(w);
        } while (w != v);
        part.blocks.push_back(block);
      }
    }
  }
  // Tarjan emits components in reverse topological order.
  std::reverse(part.blocks.begin(), part.blocks.end());
  for (int i = 0; i < part.count(); ++i)
    for (Vertex v : part.blocks[i]) part.block_index[v] = i;
  return part;
}

inline bool is_strongly_connected(const Digraph& g) {
  if (g.size() == 0) return true;
  return reach_excluding(g, {}, Vertex{0}) == g.vertices() &&
         coreach_excluding(g, {}, VertexSet::single(0)) == g.vertices();
}

inline Digraph symmetric_closure(const Digraph& g) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    es.emplace_back(u, v);
    es.emplace_back(v, u);
  }
  return Digraph(g.size(), es, g.labels());
}

inline bool is_symmetric(const Digraph& g) {
  for (auto [u, v] : g.edges())
    if (!g.has_edge(v, u)) return false;
  return true;
}

// Edge-list text: first non-comment line is n, then one "u v" per line.
inline Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::vector<long> nums;
    for (const auto& t : tok) {
      std::size_t used = 0;
      long x = 0;
      try {
        x = std::stol(t, &used);
      } catch (const std::exception&) {
        fail("expected integer, got '" + t + "'");
      }
      if (used != t.size()) fail("expected integer, got '" + t + "'");
      nums.push_back(x);
    }
    if (n < 0) {
      if (nums.size() != 1) fail("expected vertex count");
      if (nums[0] < 0 || nums[0] > VertexSet::kMaxVertices)
        fail("vertex count must be in 0.." + std::to_string(VertexSet::kMaxVertices));
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) fail("expected edge 'u v'");
    for (long x : nums)
      if (x < 0 || x >= n)
        fail("vertex " + std::to_string(x) + " not below declared count " + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (n < 0) throw InputError("missing vertex count");
  return Digraph(n, edges);
}

inline std::string emit_edge_list(const Digraph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string emit_dot(const Digraph& g) {
  std::string out = "digraph G {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(v);
    if (g.has_labels()) out += " [label=\"" + g.label(v) + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Digraph load_edge_list(const std::string& path) {
  try {
    return parse_edge_list(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace pw
