#include "srn/edge_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace srn {

namespace {

constexpr int kEmbedVertexCap = 1 << 14;

// Shared bookkeeping for the two edge-coloring constructions: colors per edge
// plus an (edge at vertex with color c) table for O(1) free-color queries.
struct ColorState {
  const std::vector<Edge>& edges;
  int palette;
  std::vector<int> color;           // per edge, -1 = uncolored
  std::vector<std::vector<int>> at; // at[v][c] = edge id or -1

  ColorState(int n, const std::vector<Edge>& e, int palette_size)
      : edges(e), palette(palette_size), color(e.size(), -1),
        at(n, std::vector<int>(std::max(palette_size, 1), -1)) {}

  bool is_free(int v, int c) const { return at[v][c] == -1; }

  int first_free(int v) const {
    for (int c = 0; c < palette; ++c)
      if (at[v][c] == -1) return c;
    throw std::logic_error("edge coloring: no free color (palette too small)");
  }

  void assign(int eid, int c) {
    auto [u, v] = edges[eid];
    if (color[eid] != -1) {
      at[u][color[eid]] = -1;
      at[v][color[eid]] = -1;
    }
    color[eid] = c;
    at[u][c] = eid;
    at[v][c] = eid;
  }

  void unassign(int eid) {
    if (color[eid] == -1) return;
    auto [u, v] = edges[eid];
    at[u][color[eid]] = -1;
    at[v][color[eid]] = -1;
    color[eid] = -1;
  }

  int other(int eid, int v) const {
    return edges[eid].first == v ? edges[eid].second : edges[eid].first;
  }

  // Maximal path from x alternating colors (first, second); x must miss one
  // of them so the walk is a simple path. Swaps the two colors along it.
  void invert_path(int x, int first, int second) {
    std::vector<int> path;
    int cur = x;
    int want = first;
    while (true) {
      int eid = at[cur][want];
      if (eid == -1) break;
      path.push_back(eid);
      cur = other(eid, cur);
      want = (want == first) ? second : first;
    }
    for (int eid : path) unassign(eid);
    int c = first;  // original color of the current path edge
    for (int eid : path) {
      assign(eid, c == first ? second : first);
      c = (c == first) ? second : first;
    }
  }
};

// Fan/Kempe-chain construction behind the Delta+1 bound.
void color_edge_general(ColorState& st, const std::vector<std::vector<std::pair<int, int>>>& adj,
                        int eid) {
  int x = st.edges[eid].first;
  int y = st.edges[eid].second;

  std::vector<int> fan{y};
  std::vector<char> in_fan(st.at.size(), 0);
  in_fan[y] = 1;
  bool extended = true;
  while (extended) {
    extended = false;
    for (auto [w, we] : adj[x]) {
      if (st.color[we] == -1 || in_fan[w]) continue;
      if (st.is_free(fan.back(), st.color[we])) {
        fan.push_back(w);
        in_fan[w] = 1;
        extended = true;
      }
    }
  }

  int c = st.first_free(x);
  int d = st.first_free(fan.back());
  if (c != d) st.invert_path(x, d, c);

  // first fan vertex that misses d after the inversion
  std::size_t w_idx = 0;
  while (w_idx < fan.size() && !st.is_free(fan[w_idx], d)) ++w_idx;
  if (w_idx == fan.size()) throw std::logic_error("edge coloring: fan rotation failed");

  std::vector<int> fan_edge(w_idx + 1);
  for (std::size_t i = 0; i <= w_idx; ++i) {
    int ce = -1;
    for (auto [w, we] : adj[x])
      if (w == fan[i]) {
        ce = we;
        break;
      }
    fan_edge[i] = ce;
  }
  // shift colors down the fan; unassign everything first so the at-table
  // never holds two edges per slot
  std::vector<int> new_colors(w_idx + 1);
  for (std::size_t i = 0; i < w_idx; ++i) new_colors[i] = st.color[fan_edge[i + 1]];
  new_colors[w_idx] = d;
  for (std::size_t i = 0; i <= w_idx; ++i) st.unassign(fan_edge[i]);
  for (std::size_t i = 0; i <= w_idx; ++i) st.assign(fan_edge[i], new_colors[i]);
}

std::vector<int> compact_colors(std::vector<int> colors, int* count_out) {
  std::vector<int> used;
  for (int c : colors)
    if (std::find(used.begin(), used.end(), c) == used.end()) used.push_back(c);
  std::sort(used.begin(), used.end());
  for (int& c : colors)
    c = static_cast<int>(std::find(used.begin(), used.end(), c) - used.begin());
  *count_out = static_cast<int>(used.size());
  return colors;
}

}  // namespace

ProperEdgeColoring proper_edge_coloring(const Graph& g) {
  auto edges = g.edges();
  int n = g.vertex_count();
  int delta = max_degree(g);
  if (edges.empty()) return {0, {}};

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].first].emplace_back(edges[i].second, static_cast<int>(i));
    adj[edges[i].second].emplace_back(edges[i].first, static_cast<int>(i));
  }

  bool is_bipartite = bipartition(g).has_value();
  ColorState st(n, edges, is_bipartite ? delta : delta + 1);

  if (is_bipartite) {
    // Alternating-path recoloring reaches Delta colors on bipartite graphs:
    // the (a,b)-path from u cannot end at v by a parity argument.
    for (std::size_t eid = 0; eid < edges.size(); ++eid) {
      auto [u, v] = edges[eid];
      int a = st.first_free(u);
      int b = st.first_free(v);
      if (a != b) st.invert_path(u, b, a);
      st.assign(static_cast<int>(eid), b);
    }
  } else {
    for (std::size_t eid = 0; eid < edges.size(); ++eid)
      color_edge_general(st, adj, static_cast<int>(eid));
  }

  ProperEdgeColoring out;
  out.colors = compact_colors(std::move(st.color), &out.color_count);
  return out;
}

std::vector<std::vector<int>> euler_circuit(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("euler_circuit: vertex " + std::to_string(v) +
                                  " has odd degree");

  BitMatrix work = g.adjacency();
  std::vector<std::vector<int>> walks;
  for (const auto& comp : connected_components(g)) {
    int start = comp.front();
    if (g.degree(start) == 0) continue;
    std::vector<int> stack{start};
    std::vector<int> circuit;
    while (!stack.empty()) {
      int v = stack.back();
      int u = work.first_in_row(v);
      if (u != -1) {
        work.clear(v, u);
        stack.push_back(u);
      } else {
        circuit.push_back(v);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    walks.push_back(std::move(circuit));
  }
  return walks;
}

RegularEmbedding embed_regular(const Graph& g) {
  int delta = max_degree(g);
  if (delta < 1) throw std::invalid_argument("embed_regular: graph has no edges");

  Graph h = g;
  while (min_degree(h) < delta) {
    int n = h.vertex_count();
    if (2 * n > kEmbedVertexCap)
      throw std::runtime_error("embed_regular: doubling exceeds the vertex cap");
    Graph h2(2 * n);
    for (auto [u, v] : h.edges()) {
      h2.add_edge(u, v);
      h2.add_edge(u + n, v + n);
    }
    for (int v = 0; v < n; ++v)
      if (h.degree(v) < delta) h2.add_edge(v, v + n);
    h = std::move(h2);
  }

  std::vector<int> embedding(g.vertex_count());
  std::iota(embedding.begin(), embedding.end(), 0);
  return {std::move(h), std::move(embedding)};
}

std::vector<std::vector<Edge>> decompose_regular_bipartite(const Graph& b, int k) {
  if (k < 1) throw std::invalid_argument("decompose_regular_bipartite: k must be >= 1");
  auto side = bipartition(b);
  if (!side) throw std::invalid_argument("decompose_regular_bipartite: graph is not bipartite");
  for (int v = 0; v < b.vertex_count(); ++v)
    if (b.degree(v) != k)
      throw std::invalid_argument("decompose_regular_bipartite: graph is not " +
                                  std::to_string(k) + "-regular");

  int n = b.vertex_count();
  std::vector<int> left;
  for (int v = 0; v < n; ++v)
    if ((*side)[v] == 0) left.push_back(v);

  BitMatrix work = b.adjacency();
  std::vector<std::vector<Edge>> matchings;
  std::vector<int> match(n, -1);
  std::vector<char> visited(n);

  // Kuhn augmenting search on the residual graph.
  auto augment = [&](auto&& self, int x) -> bool {
    bool found = false;
    work.for_each_in_row(x, [&](int y) {
      if (found || visited[y]) return;
      visited[y] = 1;
      if (match[y] == -1 || self(self, match[y])) {
        match[y] = x;
        match[x] = y;
        found = true;
      }
    });
    return found;
  };

  for (int round = 0; round < k; ++round) {
    std::fill(match.begin(), match.end(), -1);
    for (int x : left) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, x))
        throw std::logic_error("decompose_regular_bipartite: perfect matching missing");
    }
    std::vector<Edge> matching;
    for (int x : left)
      matching.emplace_back(std::min(x, match[x]), std::max(x, match[x]));
    std::sort(matching.begin(), matching.end());
    for (auto [u, v] : matching) work.clear(u, v);
    matchings.push_back(std::move(matching));
  }
  return matchings;
}

TwoFactorization two_factorize(const Graph& h) {
  int n = h.vertex_count();
  if (n == 0) throw std::invalid_argument("two_factorize: empty graph");
  int d = h.degree(0);
  for (int v = 0; v < n; ++v)
    if (h.degree(v) != d) throw std::invalid_argument("two_factorize: graph is not regular");
  if (d % 2 != 0) throw std::invalid_argument("two_factorize: degree is odd");
  if (d < 2) throw std::invalid_argument("two_factorize: degree must be >= 2");
  int k = d / 2;

  TwoFactorization result;
  result.factors.assign(k, {});

  // Orient each component along an Euler circuit, then split the k-regular
  // out/in double graph into k perfect matchings; each matching reads back as
  // one 2-factor.
  for (const auto& walk : euler_circuit(h)) {
    std::vector<int> members(walk.begin(), walk.end() - 1);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int m = static_cast<int>(members.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i) local[members[i]] = i;

    Graph dbl(2 * m);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      dbl.add_edge(local[walk[i]], m + local[walk[i + 1]]);

    auto matchings = decompose_regular_bipartite(dbl, k);
    for (int j = 0; j < k; ++j)
      for (auto [x, y] : matchings[j]) {
        int u = members[x];
        int v = members[y - m];
        result.factors[j].emplace_back(std::min(u, v), std::max(u, v));
      }
  }
  for (auto& f : result.factors) std::sort(f.begin(), f.end());
  return result;
}

}  // namespace srn
