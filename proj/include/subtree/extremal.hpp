#ifndef SUBTREE_EXTREMAL_HPP
#define SUBTREE_EXTREMAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subtree/canonical.hpp"
#include "subtree/common.hpp"
#include "subtree/count.hpp"
#include "subtree/tree.hpp"

namespace subtree {

/// Breadth-first labelling of a greedy tree: `order` lists vertices root
/// first, layer by layer; layer_sizes[i] is the number of vertices at height i.
struct BfsLabeling {
  std::vector<Vertex> order;
  std::vector<std::size_t> layer_sizes;
};

struct GreedyTree {
  Tree tree;
  BfsLabeling labeling;
};

/// Greedy breadth-first tree for a degree sequence.
///
/// Vertex i receives degree pi[i]. The root (vertex 0) gets pi[0] children,
/// every later vertex gets pi[i] - 1, and children are handed out in id
/// order, so ids coincide with the breadth-first order and the largest
/// remaining degrees always land in the shallowest free slots.
inline GreedyTree build_greedy_bfs(const DegreeSequence& pi) {
  const std::size_t n = pi.size();
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<std::size_t> height(n, 0);
  Vertex next = 1;
  for (Vertex v = 0; v < n && next < n; ++v) {
    const std::size_t kids = v == 0 ? pi[0] : pi[v] - 1;
    for (std::size_t j = 0; j < kids; ++j) {
      height[next] = height[v] + 1;
      edges.emplace_back(v, next++);
    }
  }
  GreedyTree out{tree_from_edges(n, edges), {}};
  out.labeling.order.resize(n);
  for (Vertex v = 0; v < n; ++v) out.labeling.order[v] = v;
  out.labeling.layer_sizes.assign(height.back() + 1, 0);
  for (std::size_t h : height) ++out.labeling.layer_sizes[h];
  return out;
}

/// Checks the two BFS-ordering conditions for an explicit vertex order:
/// heights nondecreasing and degrees nonincreasing along the order, and
/// children of earlier parents precede children of later parents.
inline bool is_bfs_ordering(const RootedView& view, std::span<const Vertex> order) {
  const std::size_t n = view.tree.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex u = order[i - 1], v = order[i];
    if (view.height[u] > view.height[v]) return false;
    if (view.tree.degree(u) < view.tree.degree(v)) return false;
  }
  // With heights sorted, condition (2) reduces to: parent positions are
  // nondecreasing along the order.
  std::size_t last_parent = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t p = pos[*view.parent[order[i]]];
    if (p < last_parent) return false;
    last_parent = p;
  }
  return true;
}

namespace detail {

struct BfsSearch {
  const RootedView& view;
  std::vector<std::string> codes;
  std::vector<Vertex> order;

  std::size_t deg(Vertex v) const { return view.tree.degree(v); }

  bool extend(std::size_t layer_begin) {
    const std::size_t layer_end = order.size();
    std::vector<Vertex> next;
    // Runs of equal-degree siblings are the only freedom in the next layer.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      std::vector<Vertex> kids = view.children[order[i]];
      std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
        if (deg(a) != deg(b)) return deg(a) > deg(b);
        return codes[a] < codes[b];
      });
      std::size_t start = next.size();
      for (std::size_t j = 0; j < kids.size(); ++j) {
        if (j > 0 && deg(kids[j]) != deg(kids[j - 1])) {
          if (next.size() - start > 1) runs.emplace_back(start, next.size());
          start = next.size();
        }
        next.push_back(kids[j]);
      }
      if (next.size() - start > 1) runs.emplace_back(start, next.size());
    }
    if (next.empty()) return true;
    if (deg(order[layer_end - 1]) < deg(next.front())) return false;
    for (std::size_t j = 1; j < next.size(); ++j) {
      if (deg(next[j - 1]) < deg(next[j])) return false;
    }

    auto by_code = [&](Vertex a, Vertex b) { return codes[a] < codes[b]; };
    while (true) {
      order.insert(order.end(), next.begin(), next.end());
      if (extend(layer_end)) return true;
      order.resize(layer_end);
      // Odometer over distinct permutations of each run; isomorphic siblings
      // are interchangeable and enumerated once.
      std::size_t r = 0;
      for (; r < runs.size(); ++r) {
        auto first = next.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
        auto last = next.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
        if (std::next_permutation(first, last, by_code)) break;
      }
      if (r == runs.size()) return false;
    }
  }
};

}  // namespace detail

/// Searches for a BFS-ordering of the rooted tree; returns a witness order.
///
/// Within a layer the order is forced up to permuting equal-degree siblings
/// (parents fix the group order, degrees fix the order inside a group), so the
/// search backtracks over those permutations only.
inline std::optional<std::vector<Vertex>> has_bfs_ordering(const RootedView& view) {
  detail::BfsSearch search{view, subtree_codes(view), {view.root}};
  if (!search.extend(0)) return std::nullopt;
  return std::move(search.order);
}

/// Component exchange (T' -> T''): the branches of x through the
/// neighbours in `x_side` are reattached at y, and the branches of y through
/// `y_side` are reattached at x.
///
/// Degrees of x and y change unless |x_side| = |y_side|; callers that need a
/// fixed degree sequence must pick the sets accordingly.
inline Tree swap_components(const Tree& t, Vertex x, Vertex y, std::span<const Vertex> x_side,
                            std::span<const Vertex> y_side) {
  const std::size_t n = t.size();
  if (x >= n || y >= n) throw InvalidVertex("swap endpoint out of range");
  if (x == y) throw InvalidCut("swap endpoints must differ");
  const std::vector<Vertex> path = path_between(t, x, y);
  const Vertex toward_y = path[1];
  const Vertex toward_x = path[path.size() - 2];

  std::vector<char> moved_x(n, 0), moved_y(n, 0);
  for (Vertex c : x_side) {
    if (c >= n || !t.adjacent(x, c)) throw InvalidCut("x_side vertex is not a neighbour of x");
    if (c == toward_y) throw InvalidCut("x_side branch contains y");
    if (moved_x[c]) throw InvalidCut("duplicate vertex in x_side");
    moved_x[c] = 1;
  }
  for (Vertex e : y_side) {
    if (e >= n || !t.adjacent(y, e)) throw InvalidCut("y_side vertex is not a neighbour of y");
    if (e == toward_x) throw InvalidCut("y_side branch contains x");
    if (moved_y[e]) throw InvalidCut("duplicate vertex in y_side");
    moved_y[e] = 1;
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (auto [u, v] : t.edges()) {
    if ((u == x && moved_x[v]) || (v == x && moved_x[u])) {
      edges.emplace_back(y, u == x ? v : u);
    } else if ((u == y && moved_y[v]) || (v == y && moved_y[u])) {
      edges.emplace_back(x, u == y ? v : u);
    } else {
      edges.emplace_back(u, v);
    }
  }
  return tree_from_edges(n, edges);
}

inline Tree swap_components(const Tree& t, Vertex x, Vertex y, std::initializer_list<Vertex> x_side,
                            std::initializer_list<Vertex> y_side) {
  return swap_components(t, x, y, std::span<const Vertex>(x_side.begin(), x_side.size()),
                         std::span<const Vertex>(y_side.begin(), y_side.size()));
}

/// Labelling of the x-y path as x_m ... x_1 (z) y_1 ... y_m together with the
/// components left after deleting every path edge. Indices are 1-based.
struct PathDecomposition {
  Tree tree;
  std::vector<Vertex> xs;  // xs[i-1] = x_i
  std::vector<Vertex> ys;  // ys[i-1] = y_i
  std::optional<Vertex> z;
  /// component[v] = path vertex whose component contains v.
  std::vector<Vertex> component;

  std::size_t m() const { return xs.size(); }
  Vertex x(std::size_t i) const { return xs.at(i - 1); }
  Vertex y(std::size_t i) const { return ys.at(i - 1); }

  std::vector<Vertex> members(Vertex path_vertex) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < component.size(); ++v) {
      if (component[v] == path_vertex) out.push_back(v);
    }
    return out;
  }
  std::vector<Vertex> X(std::size_t i) const { return members(x(i)); }
  std::vector<Vertex> Y(std::size_t i) const { return members(y(i)); }
  std::vector<Vertex> Z() const { return z ? members(*z) : std::vector<Vertex>{}; }

  /// X_{>=k}: side of x_k after deleting the edge from x_k toward the middle.
  std::vector<Vertex> X_ge(std::size_t k) const { return branch_vertices(tree, x(k), inner_x(k)); }
  std::vector<Vertex> Y_ge(std::size_t k) const { return branch_vertices(tree, y(k), inner_y(k)); }

  Vertex inner_x(std::size_t k) const { return k > 1 ? x(k - 1) : (z ? *z : y(1)); }
  Vertex inner_y(std::size_t k) const { return k > 1 ? y(k - 1) : (z ? *z : x(1)); }
};

inline PathDecomposition decompose_path(const Tree& t, Vertex x, Vertex y) {
  if (x >= t.size() || y >= t.size()) throw InvalidVertex("path endpoint out of range");
  if (x == y) throw InvalidVertex("path endpoints must differ");
  const std::vector<Vertex> path = path_between(t, x, y);
  const std::size_t len = path.size() - 1;
  PathDecomposition d{t, {}, {}, std::nullopt, std::vector<Vertex>(t.size(), t.size())};
  const std::size_t m = (len + 1) / 2;
  const std::size_t y_offset = len % 2 == 1 ? m - 1 : m;
  for (std::size_t i = 1; i <= m; ++i) {
    d.xs.push_back(path[m - i]);
    d.ys.push_back(path[y_offset + i]);
  }
  if (len % 2 == 0) d.z = path[m];

  std::vector<char> on_path(t.size(), 0);
  for (Vertex p : path) on_path[p] = 1;
  for (Vertex p : path) {
    std::vector<Vertex> stack{p};
    d.component[p] = p;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbors(v)) {
        if (on_path[w] || d.component[w] != t.size()) continue;
        d.component[w] = p;
        stack.push_back(w);
      }
    }
  }
  return d;
}

/// Path-edge exchange: delete x_k x_{k+1} and y_k y_{k+1}, add x_{k+1} y_k
/// and y_{k+1} x_k. The degree sequence is unchanged.
inline Tree swap_path_edges(const Tree& t, const PathDecomposition& d, std::size_t k) {
  if (k < 1 || k + 1 > d.m()) {
    throw IndexOutOfRange("k must satisfy 1 <= k <= m-1 (m = " + std::to_string(d.m()) + ")");
  }
  const Vertex xk = d.x(k), xk1 = d.x(k + 1), yk = d.y(k), yk1 = d.y(k + 1);
  if (t.size() != d.tree.size() || !t.adjacent(xk, xk1) || !t.adjacent(yk, yk1)) {
    throw InvalidCut("decomposition does not belong to this tree");
  }
  const Vertex xs[] = {xk1};
  const Vertex ys[] = {yk1};
  return swap_components(t, xk, yk, xs, ys);
}

struct LocalSearchResult {
  Tree tree;
  BigCount initial_phi;
  BigCount final_phi;
  std::size_t moves = 0;
};

namespace detail {

inline std::optional<Tree> improving_path_move(const Tree& t, const BigCount& phi) {
  const std::size_t n = t.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const PathDecomposition d = decompose_path(t, u, v);
      for (std::size_t k = 1; k < d.m(); ++k) {
        Tree candidate = swap_path_edges(t, d, k);
        if (count_subtrees(candidate) > phi) return candidate;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Tree> improving_component_move(const Tree& t, const BigCount& phi) {
  const std::size_t n = t.size();
  std::vector<Vertex> xs, ys;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const std::vector<Vertex> path = path_between(t, x, y);
      std::vector<Vertex> free_x, free_y;
      for (Vertex c : t.neighbors(x)) {
        if (c != path[1]) free_x.push_back(c);
      }
      for (Vertex c : t.neighbors(y)) {
        if (c != path[path.size() - 2]) free_y.push_back(c);
      }
      const std::uint64_t limit_x = std::uint64_t{1} << free_x.size();
      const std::uint64_t limit_y = std::uint64_t{1} << free_y.size();
      for (std::uint64_t a = 0; a < limit_x; ++a) {
        for (std::uint64_t b = 0; b < limit_y; ++b) {
          if (a == 0 && b == 0) continue;
          const auto size_a = static_cast<std::size_t>(std::popcount(a));
          const auto size_b = static_cast<std::size_t>(std::popcount(b));
          // Keep the degree multiset: either both degrees stay, or they trade.
          if (size_a != size_b && t.degree(x) + size_b - size_a != t.degree(y)) continue;
          xs.clear();
          ys.clear();
          for (std::size_t i = 0; i < free_x.size(); ++i) {
            if (a >> i & 1) xs.push_back(free_x[i]);
          }
          for (std::size_t i = 0; i < free_y.size(); ++i) {
            if (b >> i & 1) ys.push_back(free_y[i]);
          }
          Tree candidate = swap_components(t, x, y, xs, ys);
          if (count_subtrees(candidate) > phi) return candidate;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Hill-climbs on phi with degree-preserving exchange moves: path-edge swaps
/// first (vertex pairs in lexicographic order, k ascending), then component
/// swaps. The first strictly improving move is taken each round.
inline LocalSearchResult local_search_optimize(const Tree& start) {
  LocalSearchResult result{start, count_subtrees(start), 0, 0};
  result.final_phi = result.initial_phi;
  while (true) {
    std::optional<Tree> next = detail::improving_path_move(result.tree, result.final_phi);
    if (!next) next = detail::improving_component_move(result.tree, result.final_phi);
    if (!next) break;
    result.tree = std::move(*next);
    result.final_phi = count_subtrees(result.tree);
    ++result.moves;
  }
  return result;
}

}  // namespace subtree

#endif  // SUBTREE_EXTREMAL_HPP
