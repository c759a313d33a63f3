#include "srn/free_coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "srn/edge_coloring.hpp"

namespace srn {

LemmaColoring lemma_free_coloring(const Graph& g, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("lemma_free_coloring: n, m must be >= 1");
  int delta = max_degree(g);
  auto edges = g.edges();

  if (delta <= n + m - 3) {
    // Proper coloring with <= Delta+1 <= n+m-2 classes, first n-1 classes red.
    auto pec = proper_edge_coloring(g);
    EdgeColoring out;
    out.color_count = 2;
    out.colors.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      out.colors[i] = pec.colors[i] < n - 1 ? 0 : 1;
    return {std::move(out), 1};
  }

  if (delta == n + m - 2 && n % 2 == 1 && m % 2 == 1) {
    EdgeColoring out;
    out.color_count = 2;
    out.colors.resize(edges.size());
    if (!edges.empty()) {
      // Delta is even here; embed into a Delta-regular host, split it into
      // Delta/2 two-factors and take the first (n-1)/2 of them as red.
      auto emb = embed_regular(g);
      auto factorization = two_factorize(emb.host);
      int red_factors = (n - 1) / 2;

      std::unordered_map<std::uint64_t, int> factor_of;
      std::uint64_t stride = static_cast<std::uint64_t>(emb.host.vertex_count());
      for (std::size_t j = 0; j < factorization.factors.size(); ++j)
        for (auto [u, v] : factorization.factors[j])
          factor_of[u * stride + v] = static_cast<int>(j);

      for (std::size_t i = 0; i < edges.size(); ++i) {
        int u = emb.embedding[edges[i].first];
        int v = emb.embedding[edges[i].second];
        auto it = factor_of.find(static_cast<std::uint64_t>(std::min(u, v)) * stride +
                                 static_cast<std::uint64_t>(std::max(u, v)));
        if (it == factor_of.end())
          throw std::logic_error("lemma_free_coloring: edge missing from factorization");
        out.colors[i] = it->second < red_factors ? 0 : 1;
      }
    }
    return {std::move(out), 2};
  }

  throw LemmaHypothesesError(
      "hypotheses of Lemma not met: need Delta <= n+m-3, or Delta == n+m-2 with n, m odd "
      "(Delta = " + std::to_string(delta) + ", n = " + std::to_string(n) +
      ", m = " + std::to_string(m) + ")");
}

bool verify_free(const Graph& g, const EdgeColoring& c, const std::vector<StarForest>& forests) {
  if (static_cast<int>(forests.size()) != c.color_count)
    throw std::invalid_argument("verify_free: forest count does not match color count");
  if (c.colors.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("verify_free: coloring not total on E(g)");
  for (int color = 0; color < c.color_count; ++color)
    if (contains_in_color(g, c, color, forests[color])) return false;
  return true;
}

}  // namespace srn
