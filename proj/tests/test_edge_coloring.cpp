#include <doctest.h>

#include <random>
#include <set>

#include "srn/edge_coloring.hpp"
#include "oracles.hpp"

using namespace srn;

namespace {

bool coloring_is_proper(const Graph& g, const ProperEdgeColoring& pec) {
  auto edges = g.edges();
  std::vector<std::set<int>> seen(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int c = pec.colors[i];
    if (c < 0 || c >= pec.color_count) return false;
    if (!seen[edges[i].first].insert(c).second) return false;
    if (!seen[edges[i].second].insert(c).second) return false;
  }
  return true;
}

bool factorization_is_valid(const Graph& h, const TwoFactorization& tf, int k) {
  if (static_cast<int>(tf.factors.size()) != k) return false;
  std::set<Edge> all;
  for (const auto& f : tf.factors) {
    std::vector<int> deg(h.vertex_count(), 0);
    for (auto [u, v] : f) {
      if (!h.has_edge(u, v)) return false;
      if (!all.insert({u, v}).second) return false;  // factors must be disjoint
      ++deg[u];
      ++deg[v];
    }
    for (int v = 0; v < h.vertex_count(); ++v)
      if (deg[v] != 2) return false;  // spanning and 2-regular
  }
  return static_cast<int>(all.size()) == h.edge_count();
}

}  // namespace

TEST_CASE("proper_edge_coloring spec examples") {
  auto star = proper_edge_coloring(make_star(5));
  CHECK(star.color_count == 5);
  CHECK(coloring_is_proper(make_star(5), star));

  auto c6 = proper_edge_coloring(make_cycle(6));
  CHECK(c6.color_count == 2);
  CHECK(coloring_is_proper(make_cycle(6), c6));

  auto k4 = proper_edge_coloring(make_complete(4));
  CHECK(k4.color_count <= 4);
  CHECK(coloring_is_proper(make_complete(4), k4));

  CHECK(proper_edge_coloring(Graph(3)).color_count == 0);
}

TEST_CASE("proper_edge_coloring bounds on random graphs") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 39;
    Graph g = oracles::random_graph(rng, n, 0.05 + 0.02 * (trial % 20));
    auto pec = proper_edge_coloring(g);
    CHECK(coloring_is_proper(g, pec));
    CHECK(pec.color_count <= max_degree(g) + 1);
  }
}

TEST_CASE("proper_edge_coloring reaches Delta on bipartite graphs") {
  std::mt19937 rng(607);
  for (int trial = 0; trial < 100; ++trial) {
    int a = 1 + trial % 12, b = 1 + (trial * 7) % 12;
    Graph g = oracles::random_bipartite(rng, a, b, 0.2 + 0.05 * (trial % 10));
    auto pec = proper_edge_coloring(g);
    CHECK(coloring_is_proper(g, pec));
    CHECK(pec.color_count <= max_degree(g));
  }
}

TEST_CASE("euler_circuit spec examples") {
  auto c4 = euler_circuit(make_cycle(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].size() == 5);
  CHECK(c4[0].front() == c4[0].back());

  auto k5 = euler_circuit(make_complete(5));
  REQUIRE(k5.size() == 1);
  CHECK(k5[0].size() == 11);  // 10 edges

  CHECK_THROWS_AS(euler_circuit(make_complete(4)), std::invalid_argument);
}

TEST_CASE("euler_circuit skips edgeless components") {
  Graph g(5);  // C_4 plus an isolated vertex
  for (int v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
  auto walks = euler_circuit(g);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].size() == 5);
}

TEST_CASE("euler_circuit uses every edge exactly once") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracles::random_regular_2k(rng, 7 + trial % 12, 1 + trial % 3);
    auto walks = euler_circuit(g);
    std::set<Edge> used;
    for (const auto& walk : walks) {
      REQUIRE(walk.size() >= 2);
      CHECK(walk.front() == walk.back());
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        int u = walk[i], v = walk[i + 1];
        CHECK(g.has_edge(u, v));
        CHECK(used.insert({std::min(u, v), std::max(u, v)}).second);
      }
    }
    CHECK(static_cast<int>(used.size()) == g.edge_count());
  }
}

TEST_CASE("embed_regular spec examples") {
  // P_3 doubles into C_6
  auto emb = embed_regular(make_path(3));
  CHECK(emb.host.vertex_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(emb.host.degree(v) == 2);
  CHECK(oracles::is_subgraph_under(make_path(3), emb.host, emb.embedding));

  // already-regular graphs come back unchanged
  auto c4 = embed_regular(make_cycle(4));
  CHECK(c4.host == make_cycle(4));

  auto mixed = embed_regular(disjoint_union(make_star(2), make_star(1)));
  CHECK(max_degree(mixed.host) == 2);
  CHECK(min_degree(mixed.host) == 2);
  CHECK(oracles::is_subgraph_under(disjoint_union(make_star(2), make_star(1)), mixed.host,
                                   mixed.embedding));

  CHECK_THROWS_AS(embed_regular(Graph(2)), std::invalid_argument);
}

TEST_CASE("embed_regular on random graphs") {
  std::mt19937 rng(888);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracles::random_graph(rng, 3 + trial % 8, 0.45);
    if (max_degree(g) < 1) continue;
    auto emb = embed_regular(g);
    int delta = max_degree(g);
    for (int v = 0; v < emb.host.vertex_count(); ++v) CHECK(emb.host.degree(v) == delta);
    CHECK(oracles::is_subgraph_under(g, emb.host, emb.embedding));
  }
}

TEST_CASE("two_factorize spec examples") {
  auto c4 = two_factorize(make_cycle(4));
  CHECK(factorization_is_valid(make_cycle(4), c4, 1));

  auto k5 = two_factorize(make_complete(5));
  CHECK(factorization_is_valid(make_complete(5), k5, 2));

  CHECK_THROWS_AS(two_factorize(make_complete(4)), std::invalid_argument);  // 3-regular
  CHECK_THROWS_AS(two_factorize(make_path(3)), std::invalid_argument);      // not regular
}

TEST_CASE("two_factorize on random even-regular graphs") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 1 + trial % 4;
    Graph h = oracles::random_regular_2k(rng, 2 * k + 3 + trial % 10, k);
    if (trial % 5 == 0)  // disconnected inputs factorize per component
      h = disjoint_union(h, oracles::random_regular_2k(rng, 2 * k + 3, k));
    auto tf = two_factorize(h);
    CHECK(factorization_is_valid(h, tf, k));
  }
}

TEST_CASE("decompose_regular_bipartite spec examples") {
  auto c6 = decompose_regular_bipartite(make_cycle(6), 2);
  REQUIRE(c6.size() == 2);
  for (const auto& m : c6) CHECK(m.size() == 3);

  auto k33 = decompose_regular_bipartite(make_complete_bipartite(3, 3), 3);
  REQUIRE(k33.size() == 3);
  std::set<Edge> all;
  for (const auto& m : k33) {
    CHECK(m.size() == 3);
    for (auto e : m) CHECK(all.insert(e).second);
  }
  CHECK(all.size() == 9);

  auto k2 = decompose_regular_bipartite(make_star(1), 1);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == std::vector<Edge>{{0, 1}});

  CHECK_THROWS_AS(decompose_regular_bipartite(make_complete(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(decompose_regular_bipartite(make_cycle(6), 3), std::invalid_argument);
}
