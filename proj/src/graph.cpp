#include "srn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srn {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return adj_.test(u, v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
  if (adj_.test(u, v)) return;
  adj_.set(u, v);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_.test(u, v)) return;
  adj_.clear(u, v);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(n_);
  for (int v = 0; v < n_; ++v) deg[v] = degree(v);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edge_count_ != other.edge_count_) return false;
  return edges() == other.edges();
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("make_star: n must be >= 1");
  Graph g(n + 1);
  for (int leaf = 1; leaf <= n; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: sides must be >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("permuted: permutation size mismatch");
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  if (h.edge_count() != g.edge_count())
    throw std::invalid_argument("permuted: not a permutation");
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    comp[s] = id;
    queue.assign(1, s);
    std::vector<int> members{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      g.for_each_neighbor(v, [&](int u) {
        if (comp[u] == -1) {
          comp[u] = id;
          members.push_back(u);
          queue.push_back(u);
        }
      });
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      bool odd_cycle = false;
      g.for_each_neighbor(v, [&](int u) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          odd_cycle = true;
        }
      });
      if (odd_cycle) return std::nullopt;
    }
  }
  return side;
}

}  // namespace srn
