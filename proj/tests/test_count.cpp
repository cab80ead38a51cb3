#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "subtree/count.hpp"
#include "subtree/formulas.hpp"
#include "subtree/oracle.hpp"

using namespace subtree;

namespace {

BigCount sum_g(const Tree& t, Vertex root) {
  BigCount s = 0;
  for (const auto& x : count_rooted(root_at(t, root))) s += x;
  return s;
}

}  // namespace

TEST_CASE("count_rooted examples", "[count]") {
  const auto g = count_rooted(root_at(path_tree(3), 1));
  CHECK(g[1] == 4);
  CHECK(g[0] == 1);
  CHECK(g[2] == 1);
  CHECK(count_rooted(root_at(star_tree(4), 0))[0] == 8);

  std::mt19937_64 rng(1);
  const Tree t = naive::random_tree(12, rng);
  const RootedView view = root_at(t, 3);
  const auto gt = count_rooted(view);
  for (Vertex v = 0; v < t.size(); ++v) {
    if (view.children[v].empty()) CHECK(gt[v] == 1);
  }
}

TEST_CASE("count_subtrees examples", "[count]") {
  CHECK(count_subtrees(path_tree(4)) == 10);
  CHECK(count_subtrees(star_tree(4)) == 11);
  CHECK(count_subtrees(single_vertex()) == 1);
  CHECK(count_subtrees(spider_tree({1, 2, 2})) == 25);
  CHECK(count_subtrees(spider_tree({1, 1, 3})) == 24);
  CHECK(count_subtrees(spider_tree({2, 2, 2})) == 36);
}

TEST_CASE("count_subtrees handles counts beyond 64 bits", "[count]") {
  // star on 101 vertices: 2^100 + 100
  BigCount expected = 1;
  for (int i = 0; i < 100; ++i) expected *= 2;
  expected += 100;
  CHECK(count_subtrees(star_tree(101)) == expected);
}

TEST_CASE("f_vector examples", "[count]") {
  const FVector p3 = f_vector(path_tree(3));
  CHECK(p3.values == std::vector<BigCount>{3, 4, 3});
  CHECK(p3.argmax == std::vector<Vertex>{1});

  const FVector edge = f_vector(path_tree(2));
  CHECK(edge.values == std::vector<BigCount>{2, 2});
  CHECK(edge.argmax == std::vector<Vertex>{0, 1});

  const FVector k13 = f_vector(star_tree(4));
  CHECK(k13.values == std::vector<BigCount>{8, 5, 5, 5});
  CHECK(k13.argmax == std::vector<Vertex>{0});

  CHECK(f_vector(single_vertex()).values == std::vector<BigCount>{1});
}

TEST_CASE("count_containing_all examples", "[count]") {
  CHECK(count_containing_all(path_tree(2), {0, 1}) == 1);
  CHECK(count_containing_all(star_tree(4), {1, 2}) == 2);
  CHECK(count_containing_all(path_tree(3), {0, 2}) == 1);
  CHECK(count_containing_all(path_tree(3), {0, 0, 2}) == 1);
  CHECK_THROWS_AS(count_containing_all(path_tree(3), std::span<const Vertex>{}), EmptySet);
  CHECK_THROWS_AS(count_containing_all(path_tree(3), {0, 5}), InvalidVertex);
}

TEST_CASE("root independence", "[count][property]") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    const Tree t = naive::random_tree(1 + rng() % 10, rng);
    const BigCount phi = count_subtrees(t);
    for (Vertex r = 0; r < t.size(); ++r) REQUIRE(sum_g(t, r) == phi);
  }
}

TEST_CASE("agreement with subset enumeration on random trees", "[count][property]") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const Tree t = naive::random_tree(1 + rng() % 14, rng);
    REQUIRE(count_subtrees(t) == naive::count_subtrees(t));
    REQUIRE(count_subtrees_bruteforce(t) == naive::count_subtrees(t));

    const auto f = f_vector(t).values;
    const auto nf = naive::f_values(t);
    for (Vertex v = 0; v < t.size(); ++v) REQUIRE(f[v] == nf[v]);

    std::vector<Vertex> s;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(4, t.size());
    for (std::size_t i = 0; i < k; ++i) s.push_back(rng() % t.size());
    REQUIRE(count_containing_all(t, s) == naive::containing_all(t, s));
  }
}

TEST_CASE("path and star bound every tree", "[count][property]") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto [lower, upper] = bound_path_star(n);
    CHECK(count_subtrees(path_tree(n)) == lower);
    CHECK(count_subtrees(star_tree(n)) == upper);
    for (const Tree& t : all_free_trees(n)) {
      const BigCount phi = count_subtrees(t);
      CHECK(lower <= phi);
      CHECK(phi <= upper);
      const auto deg = degree_sequence_of(t);
      const bool is_path = n <= 2 || deg.max() == 2;
      const bool is_star = n <= 3 || deg.max() == n - 1;
      CHECK((phi == lower) == is_path);
      CHECK((phi == upper) == is_star);
    }
  }
}

TEST_CASE("f argmax is one vertex or an adjacent pair", "[count][property]") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : all_free_trees(n)) {
      const auto arg = f_vector(t).argmax;
      REQUIRE((arg.size() == 1 || arg.size() == 2));
      if (arg.size() == 2) CHECK(t.adjacent(arg[0], arg[1]));
    }
  }
}

TEST_CASE("f equals containing-all of a singleton", "[count][property]") {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    const Tree t = naive::random_tree(1 + rng() % 14, rng);
    const auto f = f_vector(t).values;
    for (Vertex v = 0; v < t.size(); ++v) {
      const Vertex s[] = {v};
      CHECK(count_containing_all(t, s) == f[v]);
      CHECK(count_containing_all_bruteforce(t, s) == f[v]);
    }
  }
}

TEST_CASE("adding a pendant vertex strictly increases phi", "[count][property]") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const Tree t = naive::random_tree(1 + rng() % 20, rng);
    std::vector<Edge> e = t.edges();
    e.emplace_back(rng() % t.size(), t.size());
    CHECK(count_subtrees(tree_from_edges(t.size() + 1, e)) > count_subtrees(t));
  }
}
