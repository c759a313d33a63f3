#include "srn/star_forest.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace srn {

StarForest StarForest::normalize(std::vector<int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("StarForest: empty size list");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("StarForest: star sizes must be positive");
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return StarForest{std::move(sizes)};
}

StarForest StarForest::parse(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("StarForest: cannot parse '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size())
      throw std::invalid_argument("StarForest: trailing junk in '" + item + "'");
    sizes.push_back(value);
  }
  return normalize(std::move(sizes));
}

std::string StarForest::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(sizes[i]);
  }
  return out;
}

namespace detail {
namespace {

// Disjoint-edge phase for the size-1 stars: exhaustive search for k
// independent edges among the available vertices. The branch that leaves the
// lowest active vertex unmatched keeps the search exact.
bool match_ones(const BitMatrix& adj, VertexSet avail, int k) {
  for (;;) {
    if (k == 0) return true;
    if (avail.count() < 2 * k) return false;
    int u = -1;
    VertexSet neigh;
    // lowest available vertex that still has an available neighbor
    for (int v = avail.first(); v != -1;) {
      VertexSet nv = avail.intersect_row(adj.row(v));
      if (!nv.empty()) {
        u = v;
        neigh = nv;
        break;
      }
      avail.erase(v);
      v = avail.first();
    }
    if (u == -1) return false;
    avail.erase(u);
    bool found = false;
    neigh.for_each([&](int v) {
      if (found) return;
      VertexSet rest = avail;
      rest.erase(v);
      if (match_ones(adj, rest, k - 1)) found = true;
    });
    if (found) return true;
    // u left unmatched; loop continues on avail without u
  }
}

struct Packer {
  const BitMatrix& adj;
  std::span<const int> sizes;  // the sizes >= 2, non-increasing
  int ones;                    // count of size-1 stars
  std::vector<int> tail_need;  // vertices needed by stars idx.. plus matching

  bool place(int idx, const VertexSet& avail) {
    if (idx == static_cast<int>(sizes.size()))
      return ones == 0 || match_ones(adj, avail, ones);
    if (avail.count() < tail_need[idx]) return false;

    int need = sizes[idx];
    // candidate centers in decreasing available-degree order
    std::array<std::pair<int, int>, VertexSet::kCapacity> cand;
    int cand_cnt = 0;
    avail.for_each([&](int c) {
      int d = avail.intersect_row(adj.row(c)).count();
      if (d >= need) cand[cand_cnt++] = {-d, c};
    });
    std::sort(cand.begin(), cand.begin() + cand_cnt);

    std::array<int, VertexSet::kCapacity> nb;
    std::array<int, VertexSet::kCapacity> pick;
    for (int ci = 0; ci < cand_cnt; ++ci) {
      int c = cand[ci].second;
      VertexSet neigh = avail.intersect_row(adj.row(c));
      int d = 0;
      neigh.for_each([&](int v) { nb[d++] = v; });

      // all `need`-subsets of the available neighbors
      for (int i = 0; i < need; ++i) pick[i] = i;
      for (;;) {
        VertexSet rest = avail;
        rest.erase(c);
        for (int i = 0; i < need; ++i) rest.erase(nb[pick[i]]);
        if (place(idx + 1, rest)) return true;

        int i = need - 1;
        while (i >= 0 && pick[i] == d - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return false;
  }
};

}  // namespace

bool contains_stars(const BitMatrix& adj, std::span<const int> sizes) {
  if (adj.size() > VertexSet::kCapacity)
    throw std::invalid_argument("contains_stars: graph too large for exact search");

  int ones = 0;
  std::size_t big = sizes.size();
  while (big > 0 && sizes[big - 1] == 1) {
    --big;
    ++ones;
  }
  Packer packer{adj, sizes.subspan(0, big), ones, {}};
  packer.tail_need.resize(big + 1);
  packer.tail_need[big] = 2 * ones;
  for (int i = static_cast<int>(big) - 1; i >= 0; --i)
    packer.tail_need[i] = packer.tail_need[i + 1] + sizes[i] + 1;
  return packer.place(0, VertexSet::all(adj.size()));
}

}  // namespace detail

bool contains_star_forest(const Graph& g, const StarForest& f) {
  return detail::contains_stars(g.adjacency(), f.sizes);
}

bool contains_in_color(const Graph& g, const EdgeColoring& c, int color, const StarForest& f) {
  if (color < 0 || color >= c.color_count)
    throw std::out_of_range("contains_in_color: color index out of range");
  auto edges = g.edges();
  if (c.colors.size() != edges.size())
    throw std::invalid_argument("contains_in_color: coloring not total on E(g)");
  BitMatrix class_adj(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (c.colors[i] == color) class_adj.set(edges[i].first, edges[i].second);
  return detail::contains_stars(class_adj, f.sizes);
}

}  // namespace srn
