#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <variant>
#include <string>
#include <utility>
#include <vector>

#include "arena.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "strategy.hpp"

namespace pw {

// Names of tree vertices: words over {1..branching}; the root is the empty
// word. Trees in the two-tree family also have a primed copy.
class TreeCoords {
 public:
  struct Node {
    std::string word;
    bool primed = false;
  };

  TreeCoords() = default;
  TreeCoords(int branching, int height) : branching_(branching), height_(height) {}

  int branching() const { return branching_; }
  int height() const { return height_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(Vertex v) const { return nodes_.at(v); }

  Vertex add(const std::string& word, bool primed) {
    Vertex id = size();
    nodes_.push_back({word, primed});
    index_.emplace(std::make_pair(word, primed), id);
    return id;
  }

  bool contains(const std::string& word, bool primed = false) const {
    return index_.count({word, primed}) > 0;
  }
  Vertex id(const std::string& word, bool primed = false) const {
    auto it = index_.find({word, primed});
    if (it == index_.end()) throw PreconditionError("no tree vertex '" + word + "'");
    return it->second;
  }

  int depth(Vertex v) const { return static_cast<int>(nodes_.at(v).word.size()); }
  bool is_root(Vertex v) const { return nodes_.at(v).word.empty(); }
  Vertex parent(Vertex v) const {
    const Node& n = nodes_.at(v);
    if (n.word.empty()) throw PreconditionError("root has no parent");
    return id(n.word.substr(0, n.word.size() - 1), n.primed);
  }
  std::vector<Vertex> children(Vertex v) const {
    const Node& n = nodes_.at(v);
    std::vector<Vertex> out;
    for (int j = 1; j <= branching_; ++j) {
      std::string w = n.word + static_cast<char>('0' + j);
      if (contains(w, n.primed)) out.push_back(id(w, n.primed));
    }
    return out;
  }
  // The same word in the other copy.
  Vertex twin(Vertex v) const {
    const Node& n = nodes_.at(v);
    return id(n.word, !n.primed);
  }
  // u is a (not necessarily strict) ancestor of v within the same copy.
  bool is_ancestor(Vertex u, Vertex v) const {
    const Node& a = nodes_.at(u);
    const Node& b = nodes_.at(v);
    return a.primed == b.primed && b.word.compare(0, a.word.size(), a.word) == 0;
  }

  // "12" for the word 12, "1'2'" for its primed twin, "ε"/"ε'" for roots.
  std::string label(Vertex v) const {
    const Node& n = nodes_.at(v);
    if (n.word.empty()) return n.primed ? "ε'" : "ε";
    if (!n.primed) return n.word;
    std::string out;
    for (char c : n.word) {
      out += c;
      out += '\'';
    }
    return out;
  }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (Vertex v = 0; v < size(); ++v) out.push_back(label(v));
    return out;
  }

 private:
  int branching_ = 0;
  int height_ = 0;
  std::vector<Node> nodes_;
  std::map<std::pair<std::string, bool>, Vertex> index_;
};

struct TreeFamily {
  Digraph graph;
  TreeCoords coords;
};

namespace detail {

inline void add_tree_nodes(TreeCoords& t, int branching, int height, bool primed) {
  if (branching > 9) throw ConfigError("tree branching above 9 is not supported");
  std::vector<std::string> level{""};
  for (int d = 0; d < height; ++d) {
    std::vector<std::string> next;
    for (const auto& w : level) {
      t.add(w, primed);
      for (int j = 1; j <= branching; ++j) next.push_back(w + static_cast<char>('0' + j));
    }
    level = std::move(next);
  }
}

}  // namespace detail

// Full tree with symmetric parent/child edges; a single vertex has height 1.
inline TreeFamily full_tree(int branching, int height) {
  if (branching < 1 || height < 1) throw ConfigError("full_tree needs branching >= 1 and height >= 1");
  TreeFamily f{Digraph(), TreeCoords(branching, height)};
  detail::add_tree_nodes(f.coords, branching, height, false);
  if (f.coords.size() > VertexSet::kMaxVertices)
    throw ConfigError("tree has more than " + std::to_string(VertexSet::kMaxVertices) + " vertices");
  std::vector<Edge> es;
  for (Vertex v = 0; v < f.coords.size(); ++v)
    for (Vertex c : f.coords.children(v)) {
      es.emplace_back(v, c);
      es.emplace_back(c, v);
    }
  f.graph = Digraph(f.coords.size(), es, f.coords.labels());
  return f;
}

// Vertex (v, w) gets id v * |V2| + w. Edge (v1,w1) -> (v2,w2) iff v1 -> v2,
// or v1 == v2 and w1 -> w2.
inline Digraph lex_product(const Digraph& a, const Digraph& b) {
  const int n2 = b.size();
  if (a.size() * n2 > VertexSet::kMaxVertices)
    throw ConfigError("product has more than " + std::to_string(VertexSet::kMaxVertices) + " vertices");
  std::vector<Edge> es;
  for (auto [v1, v2] : a.edges())
    for (Vertex w1 = 0; w1 < n2; ++w1)
      for (Vertex w2 = 0; w2 < n2; ++w2) es.emplace_back(v1 * n2 + w1, v2 * n2 + w2);
  for (Vertex v = 0; v < a.size(); ++v)
    for (auto [w1, w2] : b.edges()) es.emplace_back(v * n2 + w1, v * n2 + w2);
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels())
    for (Vertex v = 0; v < a.size(); ++v)
      for (Vertex w = 0; w < n2; ++w) labels.push_back(a.label(v) + "/" + b.label(w));
  return Digraph(a.size() * n2, es, labels);
}

// Symmetric clique without self-loops.
inline Digraph complete_graph(int k) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = 0; v < k; ++v)
      if (u != v) es.emplace_back(u, v);
  return Digraph(k, es);
}

inline Digraph directed_cycle(int n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Digraph(n, es);
}

// Each ordered pair u != v becomes an edge with probability p. The coin
// uses raw generator bits so the output is identical on every platform.
inline Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < p) es.emplace_back(u, v);
    }
  return Digraph(n, es);
}

// Two copies of the tree {1..n}^{<=n+1}: the unprimed one with edges both
// ways, the primed one with edges towards its root. Every unprimed vertex
// points to its primed twin and every primed non-root vertex points to the
// unprimed parent of its twin.
inline TreeFamily two_tree_graph(int n) {
  if (n < 1) throw ConfigError("two-tree family needs n >= 1");
  TreeFamily f{Digraph(), TreeCoords(n, n + 2)};
  detail::add_tree_nodes(f.coords, n, n + 2, false);
  detail::add_tree_nodes(f.coords, n, n + 2, true);
  if (f.coords.size() > VertexSet::kMaxVertices)
    throw ConfigError("two-tree family with n=" + std::to_string(n) + " exceeds " +
                      std::to_string(VertexSet::kMaxVertices) + " vertices");
  const TreeCoords& t = f.coords;
  std::vector<Edge> es;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (!t.node(v).primed) {
      for (Vertex c : t.children(v)) {
        es.emplace_back(v, c);
        es.emplace_back(c, v);
      }
      es.emplace_back(v, t.twin(v));
    } else if (!t.is_root(v)) {
      es.emplace_back(v, t.parent(v));
      es.emplace_back(v, t.twin(t.parent(v)));
    }
  }
  f.graph = Digraph(t.size(), es, t.labels());
  return f;
}

// Tree T_r of branching ceil(r/2)+2 and height r+1.
inline TreeFamily hierarchy_tree(int r) {
  if (r < 1) throw ConfigError("r must be >= 1");
  return full_tree((r + 1) / 2 + 2, r + 1);
}

// T_r lexicographically multiplied with the k-clique; vertex (x, i) has
// id x * k + i.
inline Digraph tree_clique_product(int r, int k) {
  if (k < 1) throw ConfigError("k must be >= 1");
  return lex_product(hierarchy_tree(r).graph, complete_graph(k));
}

// ---------------------------------------------------------------------------
// Witness strategies

namespace detail {

inline std::string word_of(const TreeCoords& t, VertexSet robbers) {
  if (robbers.size() != 1) throw PreconditionError("expected exactly one robber");
  return t.node(robbers.front()).word;
}

inline VertexSet primed_ancestors(const TreeCoords& t, const std::string& w) {
  VertexSet out;
  for (std::size_t len = 0; len <= w.size(); ++len) out.insert(t.id(w.substr(0, len), true));
  return out;
}

}  // namespace detail

// Empty if a robber on v satisfies the two-tree invariants against `cops`:
// every strict ancestor of v is occupied and the primed ancestors of its
// twin (the twin included) are free.
inline std::string two_tree_robber_error(const TreeCoords& t, VertexSet cops, Vertex v) {
  const std::string w = t.node(v).word;
  if (t.node(v).primed) return "robber left the unprimed tree";
  for (std::size_t len = 0; len < w.size(); ++len)
    if (!cops.contains(t.id(w.substr(0, len), false)))
      return "ancestor " + t.label(t.id(w.substr(0, len), false)) + " of " + t.label(v) + " is free";
  if (cops.intersects(detail::primed_ancestors(t, w))) return "primed path above " + t.label(v) + " has a cop";
  return "";
}

// Four cops sweep both trees of the two-tree family top-down: a cop pair
// on c and c' seals off each child region {cj..., c'j'...}; the cops step
// into the robber's child region with a second pair, then lift the first.
inline CopStrategy two_tree_topdown_cops(int n) {
  auto fam = std::make_shared<const TreeFamily>(two_tree_graph(n));
  typename MemoryCopAgent<std::monostate>::Spec spec;
  spec.init = [](const CopTurn&) { return std::monostate{}; };
  spec.update = [](const std::monostate& m, const CopTurn&) { return m; };
  spec.key = [](const std::monostate&) { return std::string(); };
  spec.move = [fam](const std::monostate&, const CopTurn& pos) {
    const TreeCoords& t = fam->coords;
    auto pair = [&](const std::string& w) { return VertexSet::single(t.id(w, false)) | VertexSet::single(t.id(w, true)); };
    if (pos.cops.empty()) return pair("");
    const std::string w = detail::word_of(t, pos.robbers);
    std::string deepest;
    bool found = false;
    for (Vertex c : pos.cops) {
      const std::string& cw = t.node(c).word;
      if (!found || cw.size() > deepest.size()) deepest = cw;
      found = true;
    }
    if (w.size() <= deepest.size() || w.compare(0, deepest.size(), deepest) != 0)
      throw StrategyHole("robber " + t.label(pos.robbers.front()) + " outside the sealed region");
    if (pos.cops.size() == 2) return pos.cops | pair(w.substr(0, deepest.size() + 1));
    if (pos.cops.size() == 4) return pair(deepest);
    throw StrategyHole("unexpected cop set " + to_string(pos.cops));
  };
  return memory_strategy<std::monostate>(std::move(spec), 4, "topdown");
}

// Robber against n cops restricted to the robber's component. It stays in
// the unprimed tree with every strict ancestor occupied and the primed
// ancestors of its twin cop-free, escaping upwards through the primed tree
// when an ancestor is vacated.
class TwoTreeRobberAgent : public RobberAgent {
 public:
  TwoTreeRobberAgent(std::shared_ptr<const TreeFamily> fam, int n) : fam_(std::move(fam)), n_(n) {}

  CopTurn place() override {
    Vertex root = fam_->coords.id("", false);
    check(VertexSet{}, root);
    return {VertexSet{}, VertexSet::single(root)};
  }

  CopTurn respond(const RobberTurn& mv) override {
    const TreeCoords& t = fam_->coords;
    const Vertex v = mv.robbers.front();
    const std::string w = t.node(v).word;
    if (mv.announced.intersects(primed_ancestors(w)))
      throw InvariantViolation("primed-path-free", "cops announced on the primed path above " + t.label(v));
    for (std::size_t len = 0; len < w.size(); ++len) {
      Vertex a = t.id(w.substr(0, len), false);
      if (!mv.announced.contains(a)) return finish(mv, a);
    }
    if (!mv.announced.contains(v)) return finish(mv, v);
    for (Vertex c : t.children(v)) {
      VertexSet region;
      for (Vertex x = 0; x < t.size(); ++x)
        if (t.node(x).word.compare(0, t.node(c).word.size(), t.node(c).word) == 0) region.insert(x);
      if (!region.intersects(mv.announced)) return finish(mv, c);
    }
    throw InvariantViolation("free-subtree", "no cop-free child subtree below " + t.label(v));
  }

  std::unique_ptr<RobberAgent> clone() const override { return std::make_unique<TwoTreeRobberAgent>(*this); }

 private:
  VertexSet primed_ancestors(const std::string& w) const { return detail::primed_ancestors(fam_->coords, w); }

  void check(VertexSet cops, Vertex v) const {
    if (std::string e = two_tree_robber_error(fam_->coords, cops, v); !e.empty())
      throw InvariantViolation("two-tree-robber", e);
  }

  CopTurn finish(const RobberTurn& mv, Vertex to) {
    if (mv.announced.size() > n_)
      throw PreconditionError("more than " + std::to_string(n_) + " cops announced");
    check(mv.announced, to);
    if (!robber_reach(fam_->graph, mv).contains(to))
      throw InvariantViolation("two-tree-robber", "escape path to " + fam_->coords.label(to) + " is blocked");
    return {mv.announced, VertexSet::single(to)};
  }

  std::shared_ptr<const TreeFamily> fam_;
  int n_;
};

inline RobberStrategy two_tree_robber(int n) {
  auto fam = std::make_shared<const TreeFamily>(two_tree_graph(n));
  return RobberStrategy(std::make_shared<TwoTreeRobberAgent>(fam, n), 1, "two-tree");
}

// Clearing schedule for T_r (+) K_k against an invisible robber: hold the
// block of the current tree vertex, clear each child subtree recursively,
// then release it. Uses k per tree level, k(r+1) in total.
inline std::vector<VertexSet> cops_dpw_tree(int r, int k) {
  if (k < 1) throw ConfigError("k must be >= 1");
  const TreeFamily tree = hierarchy_tree(r);
  auto block = [k](Vertex x) {
    VertexSet b;
    for (int i = 0; i < k; ++i) b.insert(x * k + i);
    return b;
  };
  std::vector<VertexSet> out;
  auto clear = [&](auto&& self, Vertex x, VertexSet held) -> void {
    out.push_back(held | block(x));
    for (Vertex c : tree.coords.children(x)) self(self, c, held | block(x));
    out.push_back(held);
  };
  clear(clear, tree.coords.id(""), VertexSet{});
  return out;
}

}  // namespace pw
