#ifndef SUBTREE_ORACLE_HPP
#define SUBTREE_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "subtree/canonical.hpp"
#include "subtree/common.hpp"
#include "subtree/count.hpp"
#include "subtree/tree.hpp"

namespace subtree {

inline constexpr std::size_t kBruteForceLimit = 16;
inline constexpr std::size_t kEnumerationLimit = 10;

// ---------------------------------------------------------------------------
// Pruefer codes

/// Decodes a Pruefer sequence of length n-2 over symbols 0..n-1 (linear time).
inline Tree tree_from_prufer(std::size_t n, std::span<const Vertex> seq) {
  if (n < 2 || seq.size() != n - 2) throw NotATree("Pruefer sequence must have length n-2");
  std::vector<std::size_t> deg(n, 1);
  for (Vertex s : seq) {
    if (s >= n) throw NotATree("Pruefer symbol out of range");
    ++deg[s];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex s : seq) {
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return tree_from_edges(n, edges);
}

inline std::vector<Vertex> prufer_code(const Tree& t) {
  const std::size_t n = t.size();
  if (n < 2) return {};
  const RootedView view = root_at(t, n - 1);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::vector<Vertex> seq;
  seq.reserve(n - 2);
  Vertex ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const Vertex next = *view.parent[leaf];
    seq.push_back(next);
    if (--deg[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

/// (n-2)! / prod (d_i - 1)!: labelled trees in which vertex i has degree pi[i].
inline BigCount labeled_count_formula(const DegreeSequence& pi) {
  const std::size_t n = pi.size();
  if (n <= 2) return 1;
  BigCount num = 1;
  for (std::size_t i = 2; i <= n - 2; ++i) num *= i;
  for (std::size_t d : pi) {
    for (std::size_t i = 2; i < d; ++i) num /= i;
  }
  return num;
}

/// Independent work units for labelled enumeration: one per distinct first
/// symbol of the Pruefer sequence. Results of different units merge by
/// addition / union.
inline std::vector<Vertex> prufer_work_units(const DegreeSequence& pi) {
  std::vector<Vertex> units;
  for (Vertex v = 0; v < pi.size(); ++v) {
    if (pi[v] >= 2) units.push_back(v);
  }
  return units;
}

/// Calls fn on every labelled tree in which vertex i has degree pi[i] and whose
/// Pruefer sequence starts with `first`. Multiset permutations only, so the
/// space is exactly the labelled class.
inline void for_each_labeled_tree(const DegreeSequence& pi, Vertex first,
                                  const std::function<void(const Tree&)>& fn) {
  const std::size_t n = pi.size();
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t copies = pi[v] - 1 - (v == first ? 1 : 0);
    rest.insert(rest.end(), copies, v);
  }
  std::vector<Vertex> seq(n - 2);
  seq[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), seq.begin() + 1);
    fn(tree_from_prufer(n, seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

inline void for_each_labeled_tree(const DegreeSequence& pi, const std::function<void(const Tree&)>& fn) {
  const std::size_t n = pi.size();
  if (n == 1) return fn(single_vertex());
  if (n == 2) return fn(tree_from_edges(2, {{0, 1}}));
  for (Vertex first : prufer_work_units(pi)) for_each_labeled_tree(pi, first, fn);
}

// ---------------------------------------------------------------------------
// Isomorphism classes within a degree class

struct TreeClass {
  CanonicalCode code;
  Tree representative;
  BigCount labeled;  // labelled trees (vertex i of degree pi[i]) in this class
  BigCount phi;
};

struct TreeClassSummary {
  DegreeSequence pi;
  BigCount labeled_count;
  std::vector<TreeClass> classes;   // ascending by code
  BigCount max_phi;
  std::vector<std::size_t> maximizers;  // indices into classes
};

/// Associative, commutative accumulator for partial enumerations.
class ClassAccumulator {
 public:
  void add(const Tree& t) {
    ++total_;
    auto code = canonical_code(t);
    auto it = classes_.find(code);
    if (it == classes_.end()) {
      classes_.emplace(std::move(code), Entry{t, 1});
    } else {
      ++it->second.labeled;
    }
  }

  void merge(const ClassAccumulator& other) {
    total_ += other.total_;
    for (const auto& [code, entry] : other.classes_) {
      auto it = classes_.find(code);
      if (it == classes_.end()) {
        classes_.emplace(code, entry);
      } else {
        it->second.labeled += entry.labeled;
      }
    }
  }

  std::size_t class_count() const { return classes_.size(); }
  BigCount labeled_total() const { return total_; }

  TreeClassSummary summarize(const DegreeSequence& pi) const {
    TreeClassSummary s{pi, total_, {}, 0, {}};
    for (const auto& [code, entry] : classes_) {
      s.classes.push_back(TreeClass{code, entry.tree, entry.labeled, count_subtrees(entry.tree)});
    }
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
      if (s.classes[i].phi > s.max_phi) {
        s.max_phi = s.classes[i].phi;
        s.maximizers.clear();
      }
      if (s.classes[i].phi == s.max_phi) s.maximizers.push_back(i);
    }
    return s;
  }

 private:
  struct Entry {
    Tree tree;
    BigCount labeled;
  };
  std::map<CanonicalCode, Entry> classes_;
  BigCount total_ = 0;
};

inline ClassAccumulator accumulate_unit(const DegreeSequence& pi, Vertex first) {
  ClassAccumulator acc;
  for_each_labeled_tree(pi, first, [&](const Tree& t) { acc.add(t); });
  return acc;
}

inline ClassAccumulator accumulate_all(const DegreeSequence& pi) {
  ClassAccumulator acc;
  for_each_labeled_tree(pi, [&](const Tree& t) { acc.add(t); });
  return acc;
}

/// One representative per isomorphism class of trees with degree sequence pi,
/// ordered by canonical code.
inline std::vector<Tree> enumerate_trees(const DegreeSequence& pi) {
  std::vector<Tree> out;
  for (auto& c : accumulate_all(pi).summarize(pi).classes) out.push_back(std::move(c.representative));
  return out;
}

inline TreeClassSummary extremal_by_enumeration(const DegreeSequence& pi,
                                                std::size_t limit = kEnumerationLimit) {
  if (pi.size() > limit) {
    throw TooLarge("n = " + std::to_string(pi.size()) + " exceeds enumeration limit " +
                   std::to_string(limit));
  }
  return accumulate_all(pi).summarize(pi);
}

/// All non-isomorphic trees of order n, grown leaf by leaf from a single
/// vertex; ordered by canonical code. Independent of the Pruefer route.
inline std::vector<Tree> all_free_trees(std::size_t n) {
  if (n == 0) return {};
  std::map<CanonicalCode, Tree> level;
  level.emplace(canonical_code(single_vertex()), single_vertex());
  for (std::size_t k = 1; k < n; ++k) {
    std::map<CanonicalCode, Tree> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < k; ++v) {
        std::vector<Edge> e = t.edges();
        e.emplace_back(v, k);
        Tree grown = tree_from_edges(k + 1, e);
        next.try_emplace(canonical_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force subtree enumeration

/// Calls fn(mask) once for every connected vertex subset. Each subset is grown
/// from its minimum vertex by include/exclude decisions on the frontier, so no
/// subset is produced twice.
inline void for_each_connected_subset(const Tree& t, std::size_t limit,
                                      const std::function<void(std::uint32_t)>& fn) {
  const std::size_t n = t.size();
  if (n > limit || n > 31) {
    throw TooLarge("n = " + std::to_string(n) + " exceeds brute-force limit " + std::to_string(limit));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : t.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::uint32_t allowed = 0;
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> grow =
      [&](std::uint32_t set, std::uint32_t frontier, std::uint32_t banned) {
        if (frontier == 0) {
          fn(set);
          return;
        }
        const std::uint32_t u = frontier & (~frontier + 1);
        const std::uint32_t rest = frontier & ~u;
        grow(set, rest, banned | u);
        const auto ui = static_cast<std::size_t>(std::countr_zero(u));
        grow(set | u, rest | (adj[ui] & allowed & ~set & ~banned & ~u), banned);
      };
  for (std::size_t v = n; v-- > 0;) {
    allowed = n == 32 ? 0 : ((std::uint32_t{1} << n) - 1);
    allowed &= ~((std::uint32_t{2} << v) - 1);  // strictly above v
    const std::uint32_t start = std::uint32_t{1} << v;
    grow(start, adj[v] & allowed, 0);
  }
}

inline BigCount count_subtrees_bruteforce(const Tree& t, std::size_t limit = kBruteForceLimit) {
  std::uint64_t count = 0;
  for_each_connected_subset(t, limit, [&](std::uint32_t) { ++count; });
  return count;
}

inline std::vector<BigCount> f_vector_bruteforce(const Tree& t, std::size_t limit = kBruteForceLimit) {
  std::vector<std::uint64_t> f(t.size(), 0);
  for_each_connected_subset(t, limit, [&](std::uint32_t mask) {
    for (std::size_t v = 0; v < t.size(); ++v) f[v] += mask >> v & 1;
  });
  return {f.begin(), f.end()};
}

inline BigCount count_containing_all_bruteforce(const Tree& t, std::span<const Vertex> required,
                                                std::size_t limit = kBruteForceLimit) {
  std::uint32_t need = 0;
  for (Vertex v : required) need |= std::uint32_t{1} << v;
  std::uint64_t count = 0;
  for_each_connected_subset(t, limit, [&](std::uint32_t mask) { count += (mask & need) == need; });
  return count;
}

}  // namespace subtree

#endif  // SUBTREE_ORACLE_HPP
