#include <doctest.h>

#include <random>

#include "srn/star_forest.hpp"
#include "oracles.hpp"

using namespace srn;

TEST_CASE("normalize and parse") {
  CHECK(StarForest::normalize({2, 3, 2}).sizes == std::vector<int>{3, 2, 2});
  CHECK(StarForest::normalize({1}).sizes == std::vector<int>{1});
  CHECK(StarForest::normalize({5}).sizes == std::vector<int>{5});
  CHECK_THROWS_AS(StarForest::normalize({}), std::invalid_argument);
  CHECK_THROWS_AS(StarForest::normalize({2, 0}), std::invalid_argument);

  CHECK(StarForest::parse("3,2,2").sizes == std::vector<int>{3, 2, 2});
  CHECK(StarForest::parse("1,4").sizes == std::vector<int>{4, 1});
  CHECK_THROWS_AS(StarForest::parse("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(StarForest::parse(""), std::invalid_argument);

  StarForest f = StarForest::parse("3,2,2");
  CHECK(f.total_edges() == 7);
  CHECK(f.component_count() == 3);
  CHECK(f.to_string() == "3,2,2");
}

TEST_CASE("parse never crashes on junk") {
  std::mt19937 rng(777111);
  std::uniform_int_distribution<int> len(0, 12), byte(32, 126);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    int l = len(rng);
    for (int i = 0; i < l; ++i) s.push_back(static_cast<char>(byte(rng)));
    try {
      StarForest f = StarForest::parse(s);
      CHECK(!f.sizes.empty());
    } catch (const std::invalid_argument&) {
    }
  }
}

TEST_CASE("contains_star_forest spec examples") {
  // after using a K_{1,2} in K_{1,3}, the remaining leaf has no incident edge
  CHECK_FALSE(contains_star_forest(make_star(3), StarForest::normalize({2, 1})));
  CHECK(contains_star_forest(make_path(4), StarForest::normalize({1, 1})));
  CHECK(contains_star_forest(disjoint_union(make_complete(3), make_star(3)),
                             StarForest::normalize({2, 2})));
}

TEST_CASE("contains_in_color spec examples") {
  Graph s3 = make_star(3);
  EdgeColoring all_red{2, std::vector<int>(3, 0)};
  CHECK(contains_in_color(s3, all_red, 0, StarForest::normalize({3})));
  CHECK_FALSE(contains_in_color(s3, all_red, 1, StarForest::normalize({3})));
  CHECK_THROWS_AS(contains_in_color(s3, all_red, 2, StarForest::normalize({3})),
                  std::out_of_range);

  // C_4 colored alternately: each class is a perfect matching
  // edge order (0,1),(0,3),(1,2),(2,3)
  Graph c4 = make_cycle(4);
  EdgeColoring alt{2, {0, 1, 1, 0}};
  CHECK_FALSE(contains_in_color(c4, alt, 0, StarForest::normalize({2})));
  CHECK_FALSE(contains_in_color(c4, alt, 1, StarForest::normalize({2})));

  // P_5, end edges red, middle blue: red holds 2K_2
  Graph p5 = make_path(5);
  EdgeColoring ends{2, {0, 1, 1, 0}};  // edges (0,1),(1,2),(2,3),(3,4)
  CHECK(contains_in_color(p5, ends, 0, StarForest::normalize({1, 1})));
}

TEST_CASE("containment matches brute force on random graphs") {
  std::mt19937 rng(2024);
  std::vector<StarForest> forests;
  for (int a = 1; a <= 4; ++a) {
    forests.push_back(StarForest::normalize({a}));
    for (int b = 1; b <= a; ++b) {
      forests.push_back(StarForest::normalize({a, b}));
      for (int c = 1; c <= b; ++c) forests.push_back(StarForest::normalize({a, b, c}));
    }
  }
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 7;
    Graph g = oracles::random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
    for (const auto& f : forests)
      CHECK(contains_star_forest(g, f) == oracles::brute_contains(g, f));
  }
}

TEST_CASE("containment is monotone under supergraphs") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + trial % 6;
    Graph h = oracles::random_graph(rng, n, 0.5);
    // random subgraph of h
    Graph g(n);
    std::bernoulli_distribution keep(0.6);
    for (auto [u, v] : h.edges())
      if (keep(rng)) g.add_edge(u, v);
    StarForest f = StarForest::normalize({1 + trial % 3, 1 + trial % 2});
    if (contains_star_forest(g, f)) CHECK(contains_star_forest(h, f));
  }
}

TEST_CASE("containment necessary conditions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + trial % 6;
    Graph g = oracles::random_graph(rng, n, 0.4);
    StarForest f = StarForest::normalize({2, 1 + trial % 2});
    if (!contains_star_forest(g, f)) continue;
    int deep = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= f.sizes.back()) ++deep;
    CHECK(deep >= f.component_count());
    CHECK(g.edge_count() >= f.total_edges());
  }
}

TEST_CASE("witness stars contain their parts") {
  for (int total = 1; total <= 7; ++total)
    for (int n = 1; n <= total; ++n)
      CHECK(contains_star_forest(make_star(total), StarForest::normalize({n})));
}
