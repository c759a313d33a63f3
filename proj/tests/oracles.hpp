#pragma once

// Independent brute-force oracles and random generators for the test suites.
// Everything here deliberately avoids the library's search machinery: the
// containment oracle walks raw adjacency, the arrowing oracle enumerates all
// q^e colorings, and isomorphism is a plain backtracking bijection search.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "srn/canonical.hpp"
#include "srn/coloring.hpp"
#include "srn/graph.hpp"
#include "srn/star_forest.hpp"

namespace oracles {

using srn::Edge;
using srn::Graph;
using srn::StarForest;

// ---- containment ----------------------------------------------------------

inline bool brute_place(const Graph& g, const std::vector<int>& sizes, std::size_t idx,
                        std::vector<char>& used) {
  if (idx == sizes.size()) return true;
  int need = sizes[idx];
  int n = g.vertex_count();
  for (int c = 0; c < n; ++c) {
    if (used[c]) continue;
    std::vector<int> nb;
    g.for_each_neighbor(c, [&](int u) {
      if (!used[u]) nb.push_back(u);
    });
    if (static_cast<int>(nb.size()) < need) continue;
    std::vector<int> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      used[c] = 1;
      for (int i = 0; i < need; ++i) used[nb[pick[i]]] = 1;
      bool ok = brute_place(g, sizes, idx + 1, used);
      used[c] = 0;
      for (int i = 0; i < need; ++i) used[nb[pick[i]]] = 0;
      if (ok) return true;
      int i = need - 1;
      while (i >= 0 && pick[i] == static_cast<int>(nb.size()) - need + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

inline bool brute_contains(const Graph& g, const StarForest& f) {
  std::vector<char> used(g.vertex_count(), 0);
  return brute_place(g, f.sizes, 0, used);
}

// ---- arrowing --------------------------------------------------------------

inline Graph color_class(const Graph& g, const std::vector<int>& colors, int color) {
  Graph h(g.vertex_count());
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (colors[i] == color) h.add_edge(edges[i].first, edges[i].second);
  return h;
}

// true iff every q-coloring has a monochromatic F_i in some color i
inline bool naive_arrows(const Graph& g, const std::vector<StarForest>& forests) {
  int q = static_cast<int>(forests.size());
  int e = g.edge_count();
  std::vector<int> colors(e, 0);
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= q;
  for (long long mask = 0; mask < count; ++mask) {
    long long x = mask;
    for (int i = 0; i < e; ++i) {
      colors[i] = static_cast<int>(x % q);
      x /= q;
    }
    bool mono = false;
    for (int c = 0; c < q && !mono; ++c)
      mono = brute_contains(color_class(g, colors, c), forests[c]);
    if (!mono) return false;  // found a free coloring
  }
  return true;
}

// ---- isomorphism (backtracking on a degree-compatible bijection) -----------

inline bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map,
                       std::vector<char>& used, int v) {
  int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (iso_extend(a, b, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  std::vector<int> map(a.vertex_count(), -1);
  std::vector<char> used(a.vertex_count(), 0);
  return iso_extend(a, b, map, used, 0);
}

// ---- graph utilities --------------------------------------------------------

inline Graph strip_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(keep.size()));
  for (auto [u, v] : g.edges()) h.add_edge(local[u], local[v]);
  return h;
}

inline bool is_subgraph_under(const Graph& sub, const Graph& host, const std::vector<int>& map) {
  for (auto [u, v] : sub.edges())
    if (!host.has_edge(map[u], map[v])) return false;
  return true;
}

// All isomorphism classes on at most max_n vertices (including edgeless),
// generated by vertex extension with canonical-code deduplication.
inline std::vector<Graph> all_graphs_up_to(int max_n) {
  std::vector<Graph> out{Graph(1)};
  std::vector<Graph> level{Graph(1)};
  for (int n = 2; n <= max_n; ++n) {
    std::map<srn::CanonicalCode, Graph> next;
    for (const Graph& g : level) {
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u)
          if ((mask >> u) & 1) h.add_edge(u, n - 1);
        next.emplace(srn::canonical_form(h), std::move(h));
      }
    }
    level.clear();
    for (auto& [code, g] : next) {
      out.push_back(g);
      level.push_back(std::move(g));
    }
  }
  return out;
}

// ---- random generators ------------------------------------------------------

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph random_bipartite(std::mt19937& rng, int a, int b, double p) {
  Graph g(a + b);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (coin(rng)) g.add_edge(u, a + v);
  return g;
}

// Random graph with maximum degree exactly target and minimum degree at
// least target - slack (keeps the doubling embedding small). With
// force_deficit the graph is guaranteed non-regular, so the regular
// embedding has real work to do.
inline Graph random_graph_with_max_degree(std::mt19937& rng, int n, int target, int slack,
                                          bool force_deficit = false) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph g(n);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [u, v] : pairs)
      if (g.degree(u) < target && g.degree(v) < target) g.add_edge(u, v);
    if (force_deficit && srn::min_degree(g) == target) {
      auto edges = g.edges();
      std::shuffle(edges.begin(), edges.end(), rng);
      for (auto [u, v] : edges) {
        g.remove_edge(u, v);
        if (srn::max_degree(g) == target) break;
        g.add_edge(u, v);
      }
    }
    if (srn::max_degree(g) != target || srn::min_degree(g) < target - slack) continue;
    if (force_deficit && srn::min_degree(g) == target) continue;
    return g;
  }
  throw std::runtime_error("random_graph_with_max_degree: generation failed");
}

// Union of k edge-disjoint Hamiltonian cycles (2k-regular), with local
// repairs when a randomly drawn cycle reuses an edge.
inline Graph random_regular_2k(std::mt19937& rng, int n, int k) {
  if (n < 2 * k + 1) throw std::runtime_error("random_regular_2k: n too small");
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Graph g(n);
    bool ok = true;
    for (int f = 0; f < k && ok; ++f) {
      auto cycle = random_permutation(rng, n);
      for (int repair = 0; repair < 200; ++repair) {
        int bad = -1;
        for (int i = 0; i < n; ++i)
          if (g.has_edge(cycle[i], cycle[(i + 1) % n])) {
            bad = i;
            break;
          }
        if (bad == -1) break;
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::swap(cycle[(bad + 1) % n], cycle[pick(rng)]);
      }
      for (int i = 0; i < n && ok; ++i)
        if (g.has_edge(cycle[i], cycle[(i + 1) % n])) ok = false;
      if (!ok) break;
      for (int i = 0; i < n; ++i) g.add_edge(cycle[i], cycle[(i + 1) % n]);
    }
    if (ok) return g;
  }
  throw std::runtime_error("random_regular_2k: generation failed");
}

}  // namespace oracles
