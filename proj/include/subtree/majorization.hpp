#ifndef SUBTREE_MAJORIZATION_HPP
#define SUBTREE_MAJORIZATION_HPP

#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subtree/common.hpp"
#include "subtree/tree.hpp"

namespace subtree {

enum class Order { Less, Equal, Greater, Incomparable };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

/// Compares two nonincreasing sequences under majorization: a <= b when every
/// prefix sum of a is at most the matching prefix sum of b and the totals agree.
inline Order majorizes(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw LengthMismatch("sequences have different lengths");
  const std::size_t total_a = std::accumulate(a.begin(), a.end(), std::size_t{0});
  const std::size_t total_b = std::accumulate(b.begin(), b.end(), std::size_t{0});
  if (total_a != total_b) throw SumMismatch("sequences have different sums");
  bool a_below = true, b_below = true;
  std::size_t pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) a_below = false;
    if (pb > pa) b_below = false;
  }
  if (a_below && b_below) return Order::Equal;
  if (a_below) return Order::Less;
  if (b_below) return Order::Greater;
  return Order::Incomparable;
}

inline Order majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  return majorizes(std::span<const std::size_t>(a.values()), std::span<const std::size_t>(b.values()));
}

struct MajorizationChain {
  std::vector<DegreeSequence> steps;  // steps.front() = a, steps.back() = b
};

/// Unit-transfer chain from a up to b (requires a <= b).
///
/// Each step adds 1 at the first index j where the sequences differ and
/// removes 1 at the first k > j where the running prefix deficit closes. That
/// k is the last entry of its run and exceeds the target entry, so the result
/// stays nonincreasing, positive, and below b.
inline MajorizationChain majorization_chain(const DegreeSequence& a, const DegreeSequence& b) {
  const Order o = majorizes(a, b);
  if (o != Order::Less && o != Order::Equal) {
    throw NotComparable("chain requires the first sequence to be majorized by the second");
  }
  MajorizationChain chain{{a}};
  std::vector<std::size_t> cur = a.values();
  const auto& target = b.values();
  while (cur != target) {
    std::size_t j = 0;
    while (cur[j] == target[j]) ++j;
    std::size_t pc = 0, pt = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      pc += cur[i];
      pt += target[i];
    }
    std::size_t k = j + 1;
    for (; k < cur.size(); ++k) {
      pc += cur[k];
      pt += target[k];
      if (pc == pt) break;
    }
    ++cur[j];
    --cur[k];
    chain.steps.push_back(validate_degree_sequence(std::span<const std::size_t>(cur)));
  }
  return chain;
}

struct MaxDegree {
  std::size_t n, delta;
};
struct Leaves {
  std::size_t n, s;
};
struct Independence {
  std::size_t n, alpha;
};
struct Matching {
  std::size_t n, beta;
};
using Constraint = std::variant<MaxDegree, Leaves, Independence, Matching>;

namespace detail {

inline DegreeSequence head_twos_ones(std::size_t head, std::size_t twos, std::size_t ones) {
  std::vector<std::size_t> d{head};
  d.insert(d.end(), twos, 2);
  d.insert(d.end(), ones, 1);
  return validate_degree_sequence(std::span<const std::size_t>(d));
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InfeasibleConstraint(what);
}

}  // namespace detail

/// Greedy max-degree sequence: as many Delta's as fit, one residual entry,
/// then leaves. Each Delta consumes Delta-1 of the n-2 units above all-ones.
inline DegreeSequence max_degree_sequence(std::size_t n, std::size_t delta) {
  detail::require(n >= 3 && delta >= 2 && delta <= n - 1,
                  "max degree needs 2 <= delta <= n-1 with n >= 3");
  const std::size_t spare = n - 2;
  const std::size_t full = spare / (delta - 1);
  const std::size_t rest = spare % (delta - 1);
  std::vector<std::size_t> d(full, delta);
  if (rest > 0) d.push_back(rest + 1);
  d.resize(n, 1);
  return validate_degree_sequence(std::span<const std::size_t>(d));
}

/// Majorization-maximal tree degree sequence within a constraint class.
inline DegreeSequence class_max_sequence(const Constraint& c) {
  return std::visit(
      [](const auto& k) -> DegreeSequence {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, MaxDegree>) {
          return max_degree_sequence(k.n, k.delta);
        } else if constexpr (std::is_same_v<K, Leaves>) {
          detail::require(k.n >= 3 && k.s >= 2 && k.s <= k.n - 1,
                          "leaf count needs 2 <= s <= n-1 with n >= 3");
          return detail::head_twos_ones(k.s, k.n - k.s - 1, k.s);
        } else if constexpr (std::is_same_v<K, Independence>) {
          detail::require(k.n >= 2 && k.alpha >= (k.n + 1) / 2 && k.alpha <= k.n - 1,
                          "independence number needs ceil(n/2) <= alpha <= n-1");
          return detail::head_twos_ones(k.alpha, k.n - k.alpha - 1, k.alpha);
        } else {
          detail::require(k.n >= 2 && k.beta >= 1 && k.beta <= k.n / 2,
                          "matching number needs 1 <= beta <= floor(n/2)");
          return detail::head_twos_ones(k.n - k.beta, k.beta - 1, k.n - k.beta);
        }
      },
      c);
}

/// Every tree degree sequence of length n, in decreasing lexicographic order.
inline std::vector<DegreeSequence> all_tree_degree_sequences(std::size_t n) {
  std::vector<DegreeSequence> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(validate_degree_sequence({0}));
    return out;
  }
  // Entries minus one form a partition of n-2 into at most n parts.
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
    if (cur.size() == n) {
      if (left == 0) out.push_back(validate_degree_sequence(std::span<const std::size_t>(cur)));
      return;
    }
    for (std::size_t extra = std::min(left, cap) + 1; extra-- > 0;) {
      cur.push_back(extra + 1);
      rec(left - extra, extra);
      cur.pop_back();
    }
  };
  rec(n - 2, n - 2);
  return out;
}

}  // namespace subtree

#endif  // SUBTREE_MAJORIZATION_HPP
