#ifndef SUBTREE_FORMULAS_HPP
#define SUBTREE_FORMULAS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subtree/common.hpp"
#include "subtree/count.hpp"
#include "subtree/extremal.hpp"
#include "subtree/majorization.hpp"
#include "subtree/tree.hpp"

namespace subtree {

namespace detail {

inline BigCount ipow(std::size_t base, std::size_t exp) {
  BigCount r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// (phi(P_n), phi(K_{1,n-1})) = (n(n+1)/2, 2^{n-1}+n-1), the global bounds.
inline std::pair<BigCount, BigCount> bound_path_star(std::size_t n) {
  BigCount lower = BigCount(n) * (n + 1) / 2;
  BigCount upper = detail::ipow(2, n - 1) + (n - 1);
  return {lower, upper};
}

/// Sum of distances over unordered vertex pairs: each edge separates the tree
/// into parts of a and b vertices and lies on exactly a*b of the paths.
inline BigCount wiener_index(const Tree& t) {
  const RootedView view = root_at(t, 0);
  std::vector<std::size_t> size(t.size(), 1);
  BigCount total = 0;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    if (auto p = view.parent[*it]) {
      size[*p] += size[*it];
      total += BigCount(size[*it]) * (t.size() - size[*it]);
    }
  }
  return total;
}

/// Maximum independent set size; a deepest-first greedy that takes every
/// vertex whose children were all skipped is optimal on trees.
inline std::size_t independence_number(const Tree& t) {
  const RootedView view = root_at(t, 0);
  std::vector<char> blocked(t.size(), 0);
  std::size_t taken = 0;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    if (blocked[*it]) continue;
    ++taken;
    if (auto p = view.parent[*it]) blocked[*p] = 1;
  }
  return taken;
}

/// Maximum matching size; matching each unmatched vertex to its unmatched
/// parent, deepest first, is optimal on trees.
inline std::size_t matching_number(const Tree& t) {
  const RootedView view = root_at(t, 0);
  std::vector<char> matched(t.size(), 0);
  std::size_t pairs = 0;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    auto p = view.parent[*it];
    if (!p || matched[*it] || matched[*p]) continue;
    matched[*it] = matched[*p] = 1;
    ++pairs;
  }
  return pairs;
}

struct MaxDegreeParams {
  std::size_t p, r, q;
};

/// Extremal answer for one constraint class. `phi` is always computed from
/// the extremal tree; `printed_formula_value` is the textbook closed
/// form, kept next to it so disagreements stay visible.
struct ClassAnswer {
  std::string kind;
  std::size_t n = 0;
  std::size_t parameter = 0;
  DegreeSequence extremal_pi;
  Tree extremal_tree;
  BigCount phi;
  std::optional<BigCount> printed_formula_value;
  bool discrepancy_flag = false;
  // Max-degree class only: the closed-form (p, r, q) and the degree
  // sequence they describe, which puts q where the degree sum requires q+1.
  std::optional<MaxDegreeParams> params;
  std::optional<std::vector<std::size_t>> printed_sequence;
  bool sequence_discrepancy = false;
};

namespace detail {

inline ClassAnswer make_answer(std::string kind, std::size_t n, std::size_t parameter,
                               const DegreeSequence& pi, std::optional<BigCount> printed) {
  GreedyTree g = build_greedy_bfs(pi);
  BigCount phi = count_subtrees(g.tree);
  const bool flag = printed.has_value() && *printed != phi;
  return ClassAnswer{std::move(kind), n,   parameter, pi, std::move(g.tree), std::move(phi),
                     std::move(printed), flag, std::nullopt, std::nullopt, false};
}

}  // namespace detail

/// p, r, q for the max-degree class: p+1 is the number of full layers below
/// the root, and n - (Delta(Delta-1)^p - 2)/(Delta-2) = (Delta-1) r + q.
/// Requires 3 <= Delta <= n-1.
inline MaxDegreeParams max_degree_params(std::size_t n, std::size_t delta) {
  if (delta < 3 || delta + 1 > n) throw InfeasibleConstraint("params need 3 <= delta <= n-1");
  // p = ceil(log_{Delta-1}((n(Delta-2)+2)/Delta)) - 1, in exact integers.
  std::size_t e = 0;
  BigCount power = delta;  // Delta (Delta-1)^e
  while (power < BigCount(n) * (delta - 2) + 2) {
    power *= delta - 1;
    ++e;
  }
  const std::size_t p = e - 1;
  const BigCount layers = (BigCount(delta) * detail::ipow(delta - 1, p) - 2) / (delta - 2);
  const std::size_t excess = static_cast<std::size_t>(BigCount(n) - layers);
  return {p, excess / (delta - 1), excess % (delta - 1)};
}

inline ClassAnswer max_degree_extremal(std::size_t n, std::size_t delta) {
  const DegreeSequence pi = class_max_sequence(MaxDegree{n, delta});
  ClassAnswer a = detail::make_answer("maxdeg", n, delta, pi, std::nullopt);
  if (delta >= 3) {
    const MaxDegreeParams params = max_degree_params(n, delta);
    a.params = params;
    // p = 0 is the star; the closed-form count of Delta entries is not an
    // integer there, so no printed sequence exists.
    if (params.p >= 1) {
      const std::size_t inner =
          static_cast<std::size_t>((BigCount(delta) * detail::ipow(delta - 1, params.p - 1) - 2) /
                                   (delta - 2));
      std::vector<std::size_t> printed(inner + params.r, delta);
      if (params.q >= 1) printed.push_back(params.q);
      printed.resize(n, 1);
      a.sequence_discrepancy = printed != pi.values();
      a.printed_sequence = std::move(printed);
    }
  }
  return a;
}

/// Closed form for the balanced spider with s legs on n vertices
/// (n - 1 = s q + t): subtrees through the centre choose a prefix of every
/// leg, the rest lie inside a single leg.
inline BigCount leaves_phi_closed_form(std::size_t n, std::size_t s) {
  const std::size_t q = (n - 1) / s, t = (n - 1) % s;
  return detail::ipow(q + 2, t) * detail::ipow(q + 1, s - t) + BigCount(t) * (q + 1) * (q + 2) / 2 +
         BigCount(s - t) * q * (q + 1) / 2;
}

inline ClassAnswer leaves_extremal(std::size_t n, std::size_t s) {
  const DegreeSequence pi = class_max_sequence(Leaves{n, s});
  const std::size_t q = (n - 1) / s, t = (n - 1) % s;
  BigCount printed = detail::ipow(q + 2, t) + detail::ipow(q + 1, s - t + 2);
  return detail::make_answer("leaves", n, s, pi, std::move(printed));
}

inline ClassAnswer independence_extremal(std::size_t n, std::size_t alpha) {
  const DegreeSequence pi = class_max_sequence(Independence{n, alpha});
  BigCount printed = detail::ipow(2, 2 * alpha + 1 - n) * detail::ipow(3, n - alpha - 1) + 2 * n -
                     alpha - 2;
  return detail::make_answer("alpha", n, alpha, pi, std::move(printed));
}

inline ClassAnswer matching_extremal(std::size_t n, std::size_t beta) {
  const DegreeSequence pi = class_max_sequence(Matching{n, beta});
  // Printed additive term; the tree itself gives n + beta - 2.
  BigCount printed = detail::ipow(2, n + 1 - 2 * beta) * detail::ipow(3, beta - 1) + BigCount(n) -
                     beta - 2;
  return detail::make_answer("beta", n, beta, pi, std::move(printed));
}

}  // namespace subtree

#endif  // SUBTREE_FORMULAS_HPP
