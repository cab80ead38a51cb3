#ifndef SUBTREE_TREE_HPP
#define SUBTREE_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subtree/common.hpp"

namespace subtree {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected tree on the dense vertex ids 0..n-1.
///
/// Instances are only produced by tree_from_edges (and the helpers built on
/// it), so every Tree in circulation is connected with exactly n-1 edges.
class Tree {
 public:
  std::size_t size() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> out = edges_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  friend Tree tree_from_edges(std::size_t n, std::span<const Edge> edges);
  Tree() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a validated tree. Throws NotATree on a wrong edge count, self-loop,
/// duplicate edge, out-of-range id, or disconnected edge set.
inline Tree tree_from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw NotATree("a tree needs at least one vertex");
  if (edges.size() != n - 1) {
    throw NotATree("expected " + std::to_string(n - 1) + " edges, got " +
                   std::to_string(edges.size()));
  }
  Tree t;
  t.adjacency_.assign(n, {});
  t.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw NotATree("vertex id out of range");
    if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    t.edges_.emplace_back(std::min(u, v), std::max(u, v));
    t.adjacency_[u].push_back(v);
    t.adjacency_[v].push_back(u);
  }
  for (auto& adj : t.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw NotATree("duplicate edge");
    }
  }
  // n-1 distinct edges plus connectivity means acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw NotATree("edge set is disconnected");
  return t;
}

inline Tree tree_from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return tree_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Tree single_vertex() { return tree_from_edges(1, std::span<const Edge>{}); }

/// Path 0-1-...-(n-1).
inline Tree path_tree(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return tree_from_edges(n, e);
}

/// Star K_{1,n-1} centred at 0.
inline Tree star_tree(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return tree_from_edges(n, e);
}

/// Spider: centre 0 with one path per entry of `legs` (entry = leg length in
/// vertices, excluding the centre). Legs are laid out in the given order.
inline Tree spider_tree(std::span<const std::size_t> legs) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return tree_from_edges(next, e);
}

inline Tree spider_tree(std::initializer_list<std::size_t> legs) {
  return spider_tree(std::span<const std::size_t>(legs.begin(), legs.size()));
}

/// Returns the tree with every vertex v renamed to perm[v].
inline Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  std::vector<Edge> e;
  e.reserve(t.edges().size());
  for (auto [u, v] : t.edges()) e.emplace_back(perm[u], perm[v]);
  return tree_from_edges(t.size(), e);
}

/// Nonincreasing degree sequence realizable by a tree.
///
/// For n >= 2 every entry is >= 1 and the total is 2(n-1). The one-vertex
/// tree is admitted with the sequence (0).
class DegreeSequence {
 public:
  const std::vector<std::size_t>& values() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::size_t operator[](std::size_t i) const { return degrees_[i]; }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }
  std::size_t max() const { return degrees_.front(); }
  std::size_t leaves() const {
    return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), 1u));
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  friend DegreeSequence validate_degree_sequence(std::span<const long long> degrees);
  std::vector<std::size_t> degrees_;
};

inline DegreeSequence validate_degree_sequence(std::span<const long long> degrees) {
  if (degrees.empty()) throw NotRealizable("empty degree sequence");
  const std::size_t n = degrees.size();
  DegreeSequence out;
  if (n == 1) {
    if (degrees[0] != 0) throw NotRealizable("a one-vertex tree has degree sequence (0)");
    out.degrees_ = {0};
    return out;
  }
  long long total = 0;
  for (long long d : degrees) {
    if (d < 1) throw NotRealizable("degree " + std::to_string(d) + " is not positive");
    total += d;
  }
  const auto expected = 2 * static_cast<long long>(n - 1);
  if (total != expected) {
    throw NotRealizable("degree sum " + std::to_string(total) + " != 2(n-1) = " +
                        std::to_string(expected));
  }
  out.degrees_.assign(degrees.begin(), degrees.end());
  std::sort(out.degrees_.begin(), out.degrees_.end(), std::greater<>());
  return out;
}

inline DegreeSequence validate_degree_sequence(std::initializer_list<long long> degrees) {
  return validate_degree_sequence(std::span<const long long>(degrees.begin(), degrees.size()));
}

inline DegreeSequence validate_degree_sequence(std::span<const std::size_t> degrees) {
  std::vector<long long> raw(degrees.begin(), degrees.end());
  return validate_degree_sequence(std::span<const long long>(raw));
}

inline DegreeSequence degree_sequence_of(const Tree& t) {
  std::vector<long long> d(t.size());
  for (Vertex v = 0; v < t.size(); ++v) d[v] = static_cast<long long>(t.degree(v));
  return validate_degree_sequence(std::span<const long long>(d));
}

/// A tree with a designated root. Children are listed in ascending id order;
/// `order` is the breadth-first visiting order starting at the root.
struct RootedView {
  Tree tree;
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<std::size_t> height;
  std::vector<Vertex> order;
};

inline RootedView root_at(const Tree& t, Vertex r) {
  const std::size_t n = t.size();
  if (r >= n) throw InvalidVertex("root " + std::to_string(r) + " out of range");
  RootedView view{t, r, std::vector<std::optional<Vertex>>(n),
                  std::vector<std::vector<Vertex>>(n), std::vector<std::size_t>(n, 0), {}};
  view.order.reserve(n);
  view.order.push_back(r);
  std::vector<char> seen(n, 0);
  seen[r] = 1;
  for (std::size_t head = 0; head < view.order.size(); ++head) {
    Vertex v = view.order[head];
    for (Vertex w : t.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      view.parent[w] = v;
      view.height[w] = view.height[v] + 1;
      view.children[v].push_back(w);
      view.order.push_back(w);
    }
  }
  return view;
}

/// The unique u-v path, endpoints included.
inline std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
  if (u >= t.size() || v >= t.size()) throw InvalidVertex("path endpoint out of range");
  const RootedView view = root_at(t, v);
  std::vector<Vertex> path{u};
  while (path.back() != v) path.push_back(*view.parent[path.back()]);
  return path;
}

inline std::size_t distance(const Tree& t, Vertex u, Vertex v) {
  return path_between(t, u, v).size() - 1;
}

/// Vertices of the component containing `start` after deleting edge
/// {start, blocked}; `blocked` must be a neighbour of `start` or absent.
inline std::vector<Vertex> branch_vertices(const Tree& t, Vertex start,
                                           std::optional<Vertex> blocked) {
  std::vector<Vertex> out{start};
  std::vector<std::pair<Vertex, std::optional<Vertex>>> stack{{start, blocked}};
  while (!stack.empty()) {
    auto [v, from] = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(v)) {
      if (from && w == *from) continue;
      out.push_back(w);
      stack.emplace_back(w, v);
    }
  }
  return out;
}

/// Subtree induced by a connected vertex set, relabelled 0..k-1 in the order
/// given. `keep` must induce a connected subgraph.
inline Tree induced_subtree(const Tree& t, std::span<const Vertex> keep) {
  std::vector<std::size_t> index(t.size(), t.size());
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> e;
  for (auto [u, v] : t.edges()) {
    if (index[u] < t.size() && index[v] < t.size()) e.emplace_back(index[u], index[v]);
  }
  return tree_from_edges(keep.size(), e);
}

}  // namespace subtree

#endif  // SUBTREE_TREE_HPP
