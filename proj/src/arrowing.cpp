#include "srn/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "srn/free_coloring.hpp"

namespace srn {

const char* to_string(ArrowStatus s) {
  switch (s) {
    case ArrowStatus::arrows: return "arrows";
    case ArrowStatus::does_not_arrow: return "does-not-arrow";
    case ArrowStatus::undecided: return "undecided";
  }
  return "?";
}

std::vector<Edge> search_edge_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  int next = 0;

  // BFS vertex order, each component entered at its maximum-degree vertex.
  std::vector<char> seen(n, 0);
  for (;;) {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (root == -1 || g.degree(v) > g.degree(root))) root = v;
    if (root == -1) break;
    std::vector<int> queue{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      pos[v] = next++;
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      });
    }
  }

  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    auto key = [&](const Edge& e) {
      int p = pos[e.first], q = pos[e.second];
      return std::pair(std::min(p, q), std::max(p, q));
    };
    return key(a) < key(b);
  });
  return edges;
}

namespace {

constexpr int kTimeCheckMask = 0x0FFF;

enum class DfsOutcome { found, exhausted, budget };

struct Searcher {
  const std::vector<StarForest>& forests;
  int q;
  std::vector<Edge> order;
  std::vector<int> min_size;               // smallest star per forest
  std::vector<std::vector<char>> equal_to; // forests i, j identical
  bool symmetry_breaking;

  std::vector<BitMatrix> class_adj;
  std::vector<std::vector<int>> class_deg;
  std::vector<int> class_edges;
  std::vector<int> assigned;

  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;

  Searcher(const Graph& g, const std::vector<StarForest>& f, const SearchBudget& budget)
      : forests(f), q(static_cast<int>(f.size())), order(search_edge_order(g)),
        symmetry_breaking(budget.symmetry_breaking), max_nodes(budget.max_nodes) {
    min_size.reserve(q);
    for (const auto& forest : f) min_size.push_back(forest.sizes.back());
    equal_to.assign(q, std::vector<char>(q, 0));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) equal_to[i][j] = (forests[i] == forests[j]);
    class_adj.assign(q, BitMatrix(g.vertex_count()));
    class_deg.assign(q, std::vector<int>(g.vertex_count(), 0));
    class_edges.assign(q, 0);
    assigned.assign(order.size(), -1);
    if (budget.max_time.count() > 0) {
      deadline = std::chrono::steady_clock::now() + budget.max_time;
      has_deadline = true;
    }
  }

  bool out_of_budget() {
    if (nodes > max_nodes) return true;
    if (has_deadline && (nodes & kTimeCheckMask) == 0 &&
        std::chrono::steady_clock::now() > deadline)
      return true;
    return false;
  }

  // Skip a color whose class is still empty while an equal lower color is
  // also empty: the two classes are interchangeable.
  bool symmetric_skip(int c) const {
    if (!symmetry_breaking || class_edges[c] != 0) return false;
    for (int c2 = 0; c2 < c; ++c2)
      if (equal_to[c][c2] && class_edges[c2] == 0) return true;
    return false;
  }

  void apply(int pos, int c) {
    auto [u, v] = order[pos];
    class_adj[c].set(u, v);
    ++class_deg[c][u];
    ++class_deg[c][v];
    ++class_edges[c];
    assigned[pos] = c;
  }

  void undo(int pos, int c) {
    auto [u, v] = order[pos];
    class_adj[c].clear(u, v);
    --class_deg[c][u];
    --class_deg[c][v];
    --class_edges[c];
    assigned[pos] = -1;
  }

  // A fresh monochromatic copy must use the new edge, whose star center is
  // one of its endpoints; skip the containment test until an endpoint's
  // class degree reaches the smallest star size.
  bool creates_copy(int pos, int c) const {
    auto [u, v] = order[pos];
    if (class_deg[c][u] < min_size[c] && class_deg[c][v] < min_size[c]) return false;
    if (class_edges[c] < forests[c].total_edges()) return false;
    return detail::contains_stars(class_adj[c], forests[c].sizes);
  }

  DfsOutcome dfs(int pos) {
    if (pos == static_cast<int>(order.size())) return DfsOutcome::found;
    for (int c = 0; c < q; ++c) {
      if (symmetric_skip(c)) continue;
      ++nodes;
      if (out_of_budget()) return DfsOutcome::budget;
      apply(pos, c);
      if (!creates_copy(pos, c)) {
        DfsOutcome r = dfs(pos + 1);
        if (r != DfsOutcome::exhausted) {
          if (r == DfsOutcome::budget) undo(pos, c);
          return r;  // found keeps `assigned` intact
        }
      }
      undo(pos, c);
    }
    return DfsOutcome::exhausted;
  }
};

EdgeColoring extract_coloring(const Graph& g, const Searcher& s) {
  auto edges = g.edges();
  EdgeColoring out;
  out.color_count = s.q;
  out.colors.assign(edges.size(), -1);
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    auto it = std::lower_bound(edges.begin(), edges.end(), s.order[i]);
    out.colors[it - edges.begin()] = s.assigned[i];
  }
  return out;
}

void validate_inputs(const Graph& g, const std::vector<StarForest>& forests) {
  if (forests.empty()) throw std::invalid_argument("arrows: need at least one forest");
  for (const auto& f : forests) {
    if (f.sizes.empty()) throw std::invalid_argument("arrows: empty forest");
    for (std::size_t i = 0; i < f.sizes.size(); ++i)
      if (f.sizes[i] < 1 || (i > 0 && f.sizes[i] > f.sizes[i - 1]))
        throw std::invalid_argument("arrows: forest sizes must be normalized");
  }
  if (g.vertex_count() > VertexSet::kCapacity)
    throw std::invalid_argument("arrows: graph too large for exact search");
}

ArrowVerdict finish(const Graph& g, const std::vector<StarForest>& forests, ArrowVerdict v) {
  if (v.status == ArrowStatus::does_not_arrow) {
    // Soundness gate on every run: the certificate must verify.
    if (!v.counterexample || !verify_free(g, *v.counterexample, forests))
      throw std::logic_error("arrows: counterexample failed verification");
  }
  return v;
}

ArrowVerdict run_sequential(const Graph& g, const std::vector<StarForest>& forests,
                            const SearchBudget& budget) {
  Searcher s(g, forests, budget);
  DfsOutcome outcome = s.dfs(0);
  ArrowVerdict verdict;
  verdict.colorings_explored = s.nodes;
  switch (outcome) {
    case DfsOutcome::found:
      verdict.status = ArrowStatus::does_not_arrow;
      verdict.counterexample = extract_coloring(g, s);
      break;
    case DfsOutcome::exhausted:
      verdict.status = ArrowStatus::arrows;
      break;
    case DfsOutcome::budget:
      verdict.status = ArrowStatus::undecided;
      break;
  }
  return verdict;
}

// Parallel mode: enumerate the surviving prefixes at a small fixed depth,
// hand each subtree to a worker with an equal share of the node budget, and
// merge in prefix order. Budget shares are fixed up front so the outcome
// does not depend on scheduling.
ArrowVerdict run_parallel(const Graph& g, const std::vector<StarForest>& forests,
                          const SearchBudget& budget) {
  int edge_total = g.edge_count();
  int q = static_cast<int>(forests.size());

  int depth = 0;
  long long width = 1;
  while (depth < edge_total - 1 && width < 4LL * budget.threads && width * q <= 4096) {
    width *= q;
    ++depth;
  }
  if (depth == 0) return run_sequential(g, forests, budget);

  // Collect viable prefixes with a depth-limited version of the same DFS.
  Searcher probe(g, forests, budget);
  std::vector<std::vector<int>> prefixes;
  std::vector<int> cur;
  std::uint64_t prefix_nodes = 0;
  auto enumerate = [&](auto&& self, int pos) -> void {
    if (pos == depth) {
      prefixes.push_back(cur);
      return;
    }
    for (int c = 0; c < q; ++c) {
      if (probe.symmetric_skip(c)) continue;
      ++prefix_nodes;
      probe.apply(pos, c);
      if (!probe.creates_copy(pos, c)) {
        cur.push_back(c);
        self(self, pos + 1);
        cur.pop_back();
      }
      probe.undo(pos, c);
    }
  };
  enumerate(enumerate, 0);

  if (prefixes.empty()) {
    ArrowVerdict verdict;
    verdict.status = ArrowStatus::arrows;
    verdict.colorings_explored = prefix_nodes;
    return verdict;
  }

  struct TaskResult {
    DfsOutcome outcome = DfsOutcome::exhausted;
    std::vector<int> assigned;
    std::uint64_t nodes = 0;
  };
  std::vector<TaskResult> results(prefixes.size());
  std::uint64_t share = std::max<std::uint64_t>(1, budget.max_nodes / prefixes.size());

  std::atomic<std::size_t> next_task{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t t = next_task.fetch_add(1);
      if (t >= prefixes.size()) return;
      SearchBudget sub = budget;
      sub.max_nodes = share;
      sub.threads = 1;
      Searcher s(g, forests, sub);
      for (int i = 0; i < depth; ++i) s.apply(i, prefixes[t][i]);
      TaskResult& r = results[t];
      r.outcome = s.dfs(depth);
      r.nodes = s.nodes;
      if (r.outcome == DfsOutcome::found) r.assigned = s.assigned;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < budget.threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  ArrowVerdict verdict;
  verdict.colorings_explored = prefix_nodes;
  bool any_budget = false;
  for (std::size_t t = 0; t < results.size(); ++t) {
    verdict.colorings_explored += results[t].nodes;
    if (results[t].outcome == DfsOutcome::budget) any_budget = true;
  }
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (results[t].outcome != DfsOutcome::found) continue;
    Searcher s(g, forests, budget);
    s.assigned = results[t].assigned;
    verdict.status = ArrowStatus::does_not_arrow;
    verdict.counterexample = extract_coloring(g, s);
    return verdict;
  }
  verdict.status = any_budget ? ArrowStatus::undecided : ArrowStatus::arrows;
  return verdict;
}

}  // namespace

ArrowVerdict arrows(const Graph& g, const std::vector<StarForest>& forests,
                    const SearchBudget& budget) {
  validate_inputs(g, forests);
  auto start = std::chrono::steady_clock::now();
  ArrowVerdict verdict = budget.threads > 1 ? run_parallel(g, forests, budget)
                                            : run_sequential(g, forests, budget);
  verdict.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return finish(g, forests, verdict);
}

ArrowVerdict arrows_with_certificate_check(const Graph& g,
                                           const std::vector<StarForest>& forests,
                                           const SearchBudget& budget) {
  return arrows(g, forests, budget);
}

}  // namespace srn
