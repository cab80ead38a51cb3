#ifndef SUBTREE_COUNT_HPP
#define SUBTREE_COUNT_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "subtree/common.hpp"
#include "subtree/tree.hpp"

namespace subtree {

/// g(v): subtrees of T(v) that contain v. g(v) = prod over children (1 + g(c)).
inline std::vector<BigCount> count_rooted(const RootedView& view) {
  std::vector<BigCount> g(view.tree.size());
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    BigCount acc = 1;
    for (Vertex c : view.children[*it]) acc *= 1 + g[c];
    g[*it] = std::move(acc);
  }
  return g;
}

/// phi(T): number of nonempty subtrees. Each subtree is counted once, at its
/// vertex closest to the root.
inline BigCount count_subtrees(const Tree& t) {
  BigCount total = 0;
  for (const auto& x : count_rooted(root_at(t, 0))) total += x;
  return total;
}

/// Per-vertex f_T(v) plus the vertices attaining the maximum.
struct FVector {
  std::vector<BigCount> values;
  std::vector<Vertex> argmax;
};

/// Two-pass rerooting. With A(v) the number of subtrees of the parent-side
/// component that contain the parent,
///   A(v) = (1 + A(p)) * prod_{s sibling of v} (1 + g(s)),   A(root) = 0,
///   f(v) = g(v) * (1 + A(v)).
/// Sibling products come from prefix/suffix products, so no division.
inline FVector f_vector(const Tree& t) {
  const RootedView view = root_at(t, 0);
  const std::vector<BigCount> g = count_rooted(view);
  const std::size_t n = t.size();
  std::vector<BigCount> up(n);  // A(v)
  up[view.root] = 0;
  std::vector<BigCount> prefix;
  for (Vertex p : view.order) {
    const auto& kids = view.children[p];
    const std::size_t k = kids.size();
    if (k == 0) continue;
    // prefix[i] = prod_{j < i} (1 + g(kids[j]))
    prefix.assign(k + 1, 1);
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * (1 + g[kids[i]]);
    BigCount suffix = 1;
    const BigCount above = 1 + up[p];
    for (std::size_t i = k; i-- > 0;) {
      up[kids[i]] = above * prefix[i] * suffix;
      suffix *= 1 + g[kids[i]];
    }
  }
  FVector out;
  out.values.resize(n);
  for (Vertex v = 0; v < n; ++v) out.values[v] = g[v] * (1 + up[v]);
  const BigCount& best = *std::max_element(out.values.begin(), out.values.end());
  for (Vertex v = 0; v < n; ++v) {
    if (out.values[v] == best) out.argmax.push_back(v);
  }
  return out;
}

/// f_T(v_1, ..., v_m): subtrees containing every vertex of `required`.
///
/// Any such subtree contains the Steiner tree of the set; it is extended
/// independently along every branch hanging off the Steiner tree, each branch
/// contributing (1 + g) at its attachment vertex.
inline BigCount count_containing_all(const Tree& t, std::span<const Vertex> required) {
  if (required.empty()) throw EmptySet("vertex set must be nonempty");
  for (Vertex v : required) {
    if (v >= t.size()) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  }
  if (required.size() == 1) return f_vector(t).values[required[0]];

  const RootedView view = root_at(t, required[0]);
  const std::vector<BigCount> g = count_rooted(view);
  std::vector<char> steiner(t.size(), 0);
  steiner[view.root] = 1;
  for (Vertex v : required) {
    for (Vertex w = v; !steiner[w]; w = *view.parent[w]) steiner[w] = 1;
  }
  BigCount total = 1;
  for (Vertex w = 0; w < t.size(); ++w) {
    if (!steiner[w]) continue;
    for (Vertex c : view.children[w]) {
      if (!steiner[c]) total *= 1 + g[c];
    }
  }
  return total;
}

inline BigCount count_containing_all(const Tree& t, std::initializer_list<Vertex> required) {
  return count_containing_all(t, std::span<const Vertex>(required.begin(), required.size()));
}

}  // namespace subtree

#endif  // SUBTREE_COUNT_HPP
