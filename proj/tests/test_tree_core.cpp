#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "subtree/canonical.hpp"
#include "subtree/oracle.hpp"
#include "subtree/tree.hpp"

using namespace subtree;

namespace {

std::vector<std::size_t> seq(const DegreeSequence& d) { return d.values(); }

}  // namespace

TEST_CASE("validate_degree_sequence sorts realizable input", "[tree-core]") {
  CHECK(seq(validate_degree_sequence({1, 2, 2, 1, 2})) == std::vector<std::size_t>{2, 2, 2, 1, 1});
  const auto fig = fixtures::layered_example_degrees();
  CHECK(validate_degree_sequence(std::span<const long long>(fig)).size() == 19);
  CHECK(seq(validate_degree_sequence({0})) == std::vector<std::size_t>{0});
  CHECK(seq(validate_degree_sequence({1, 1})) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("validate_degree_sequence rejects unrealizable input", "[tree-core]") {
  CHECK_THROWS_AS(validate_degree_sequence({3, 3, 1, 1}), NotRealizable);
  CHECK_THROWS_AS(validate_degree_sequence(std::span<const long long>{}), NotRealizable);
  CHECK_THROWS_AS(validate_degree_sequence({2, 0, 2, 0}), NotRealizable);
  CHECK_THROWS_AS(validate_degree_sequence({3, -1, 1, 1}), NotRealizable);
  CHECK_THROWS_AS(validate_degree_sequence({1}), NotRealizable);
}

TEST_CASE("tree_from_edges validates structure", "[tree-core]") {
  CHECK(tree_from_edges(2, {{0, 1}}).size() == 2);
  const Tree p4 = tree_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.edges().size() == 3);
  CHECK(p4.degree(1) == 2);

  CHECK_THROWS_AS(tree_from_edges(3, {{0, 1}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(3, {{0, 1}, {0, 1}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(3, {{0, 0}, {1, 2}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(3, {{0, 1}, {1, 3}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(4, {{0, 1}, {1, 0}, {2, 3}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(0, std::span<const Edge>{}), NotATree);
  // right edge count but a cycle plus an isolated vertex
  CHECK_THROWS_AS(tree_from_edges(4, {{0, 1}, {1, 2}, {2, 0}}), NotATree);
}

TEST_CASE("degree_sequence_of", "[tree-core]") {
  CHECK(seq(degree_sequence_of(path_tree(4))) == std::vector<std::size_t>{2, 2, 1, 1});
  CHECK(seq(degree_sequence_of(star_tree(4))) == std::vector<std::size_t>{3, 1, 1, 1});
  const auto fig = fixtures::layered_example_degrees();
  CHECK(degree_sequence_of(fixtures::layered_example()) ==
        validate_degree_sequence(std::span<const long long>(fig)));
  CHECK(seq(degree_sequence_of(single_vertex())) == std::vector<std::size_t>{0});
}

TEST_CASE("root_at computes heights and children", "[tree-core]") {
  const Tree p3 = path_tree(3);
  const RootedView mid = root_at(p3, 1);
  CHECK(mid.height == std::vector<std::size_t>{1, 0, 1});
  CHECK(mid.children[1] == std::vector<Vertex>{0, 2});
  CHECK_FALSE(mid.parent[1].has_value());

  const RootedView end = root_at(p3, 0);
  CHECK(end.height == std::vector<std::size_t>{0, 1, 2});

  const RootedView fig = root_at(fixtures::layered_example(), 0);
  std::vector<std::size_t> layers(4, 0);
  for (std::size_t h : fig.height) ++layers.at(h);
  CHECK(layers == std::vector<std::size_t>{1, 4, 9, 5});

  CHECK_THROWS_AS(root_at(p3, 3), InvalidVertex);
}

TEST_CASE("root_at invariants on random trees", "[tree-core][property]") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const Tree t = naive::random_tree(1 + rng() % 15, rng);
    const Vertex r = rng() % t.size();
    const RootedView view = root_at(t, r);
    CHECK(view.height[r] == 0);
    // every edge joins consecutive layers
    for (auto [u, v] : t.edges()) {
      const auto hu = view.height[u], hv = view.height[v];
      CHECK((hu + 1 == hv || hv + 1 == hu));
    }
    std::vector<int> owner(t.size(), 0);
    for (Vertex v = 0; v < t.size(); ++v) {
      CHECK(std::is_sorted(view.children[v].begin(), view.children[v].end()));
      for (Vertex c : view.children[v]) {
        ++owner[c];
        CHECK(view.parent[c] == v);
        CHECK(view.height[c] == view.height[v] + 1);
      }
    }
    for (Vertex v = 0; v < t.size(); ++v) CHECK(owner[v] == (v == r ? 0 : 1));
  }
}

TEST_CASE("path_between", "[tree-core]") {
  const Tree p4 = path_tree(4);
  CHECK(path_between(p4, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(distance(p4, 0, 3) == 3);
  CHECK(path_between(p4, 2, 2) == std::vector<Vertex>{2});
  CHECK(distance(p4, 2, 2) == 0);
  CHECK(path_between(star_tree(4), 1, 3) == std::vector<Vertex>{1, 0, 3});
  CHECK_THROWS_AS(path_between(p4, 0, 4), InvalidVertex);

  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    const Tree t = naive::random_tree(2 + rng() % 10, rng);
    const auto d = naive::all_distances(t);
    const Vertex u = rng() % t.size(), v = rng() % t.size();
    const auto path = path_between(t, u, v);
    CHECK(path.size() - 1 == d[u][v]);
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(t.adjacent(path[i - 1], path[i]));
  }
}

TEST_CASE("canonical_code examples", "[tree-core][canonical]") {
  const Tree p4 = path_tree(4);
  const Vertex rev[] = {3, 2, 1, 0};
  CHECK(is_isomorphic(p4, relabel(p4, rev)));
  CHECK_FALSE(is_isomorphic(p4, star_tree(4)));

  const Tree a = spider_tree({1, 2, 2});
  const Tree b = spider_tree({2, 2, 1});
  const Vertex shuffle[] = {4, 0, 5, 2, 1, 3};
  CHECK(is_isomorphic(a, relabel(b, shuffle)));
  CHECK(naive::isomorphic(a, relabel(b, shuffle)));
  CHECK_FALSE(is_isomorphic(a, spider_tree({1, 1, 3})));

  CHECK(canonical_code(single_vertex()) == canonical_code(single_vertex()));
  CHECK(centers(path_tree(4)) == std::vector<Vertex>{1, 2});
  CHECK(centers(path_tree(5)) == std::vector<Vertex>{2});
}

TEST_CASE("canonical_code is relabelling invariant", "[tree-core][canonical][property]") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 30; ++iter) {
    const Tree t = naive::random_tree(1 + rng() % 12, rng);
    const CanonicalCode code = canonical_code(t);
    std::vector<Vertex> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 100; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      REQUIRE(canonical_code(relabel(t, perm)) == code);
    }
  }
}

TEST_CASE("canonical_code separates exactly the isomorphism classes", "[tree-core][canonical][property]") {
  // Cross-check against brute-force bijection search on every pair of
  // representatives produced by leaf growth, n <= 7.
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto trees = all_free_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        CHECK(is_isomorphic(trees[i], trees[j]) == naive::isomorphic(trees[i], trees[j]));
      }
    }
  }
}

TEST_CASE("Pruefer decoding preserves the degree multiset", "[tree-core][property]") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng() % 12;
    std::vector<Vertex> code(n - 2);
    for (auto& s : code) s = rng() % n;
    const Tree t = tree_from_prufer(n, code);
    std::vector<long long> expected(n, 1);
    for (Vertex s : code) ++expected[s];
    CHECK(degree_sequence_of(t) == validate_degree_sequence(std::span<const long long>(expected)));
    CHECK(prufer_code(t) == code);
  }
}
