#ifndef SUBTREE_CANONICAL_HPP
#define SUBTREE_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "subtree/tree.hpp"

namespace subtree {

/// Relabelling-invariant encoding of a tree: equal codes iff isomorphic.
struct CanonicalCode {
  std::string code;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// AHU parenthesis code of every rooted subtree T(v) of the view.
inline std::vector<std::string> subtree_codes(const RootedView& view) {
  std::vector<std::string> code(view.tree.size());
  std::vector<std::string> parts;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const Vertex v = *it;
    parts.clear();
    std::size_t len = 2;
    for (Vertex c : view.children[v]) {
      len += code[c].size();
      parts.push_back(std::move(code[c]));
    }
    std::sort(parts.begin(), parts.end());
    std::string& out = code[v];
    out.reserve(len);
    out.push_back('(');
    for (const auto& p : parts) out += p;
    out.push_back(')');
  }
  return code;
}

inline std::string rooted_code(const Tree& t, Vertex root) {
  const RootedView view = root_at(t, root);
  return std::move(subtree_codes(view)[root]);
}

/// One or two centres, found by repeatedly stripping leaves.
inline std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline CanonicalCode canonical_code(const Tree& t) {
  const auto c = centers(t);
  std::string best = rooted_code(t, c[0]);
  if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
  return CanonicalCode{std::move(best)};
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.size() != b.size()) return false;
  if (degree_sequence_of(a) != degree_sequence_of(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace subtree

#endif  // SUBTREE_CANONICAL_HPP
