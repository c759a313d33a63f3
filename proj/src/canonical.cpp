#include "srn/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace srn {
namespace {

constexpr std::uint64_t kUnset = ~std::uint64_t{0};

// Canonicalizer for one connected component of at most 32 vertices.
// Searches vertex orderings consistent with the refined degree partition and
// keeps the minimum column-packed upper-triangle bit string. Column k holds
// the adjacency of position k against positions 0..k-1 (earliest position in
// the most significant bit), so the string is decided prefix-wise and greater
// branches prune immediately. Candidates whose transposition is an
// automorphism are collapsed, which tames the complete graphs and stars.
struct ComponentCanon {
  int n = 0;
  std::array<std::uint64_t, 32> adj{};  // bit rows over local labels
  std::array<int, 32> cell_of_pos{};
  std::array<std::uint64_t, 32> cell_mask{};
  std::array<std::uint64_t, 32> best{};
  std::array<std::uint64_t, 32> colbits{};  // per-vertex partial column
  std::uint64_t used = 0;

  // Iterated color refinement; final colors order the cells canonically.
  void build_cells() {
    std::array<int, 32> color{};
    for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);

    int color_count = 0;
    for (int round = 0; round < n; ++round) {
      // signature = (own color, sorted neighbor colors)
      std::vector<std::pair<std::vector<int>, int>> sigs(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.push_back(color[v]);
        std::uint64_t w = adj[v];
        while (w) {
          s.push_back(color[std::countr_zero(w)]);
          w &= w - 1;
        }
        std::sort(s.begin() + 1, s.end());
        sigs[v] = {std::move(s), v};
      }
      auto sorted = sigs;
      std::sort(sorted.begin(), sorted.end());
      int next = -1;
      std::vector<int> new_color(n);
      for (int i = 0; i < n; ++i) {
        if (i == 0 || sorted[i].first != sorted[i - 1].first) ++next;
        new_color[sorted[i].second] = next;
      }
      int count = next + 1;
      bool stable = color_count == count;
      for (int v = 0; v < n; ++v) color[v] = new_color[v];
      color_count = count;
      if (stable) break;
    }

    cell_mask.fill(0);
    for (int v = 0; v < n; ++v) cell_mask[color[v]] |= std::uint64_t{1} << v;
    int pos = 0;
    for (int c = 0; c < color_count; ++c) {
      int size = std::popcount(cell_mask[c]);
      for (int i = 0; i < size; ++i) cell_of_pos[pos++] = c;
    }
  }

  bool transposition_is_automorphism(int u, int v) const {
    std::uint64_t self = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return ((adj[u] ^ adj[v]) & ~self) == 0;
  }

  void dfs(int depth) {
    if (depth == n) return;
    std::uint64_t cand = cell_mask[cell_of_pos[depth]] & ~used;

    std::array<std::pair<std::uint64_t, int>, 32> order;
    int cnt = 0;
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      order[cnt++] = {colbits[v], v};
    }
    std::sort(order.begin(), order.begin() + cnt);

    std::array<int, 32> tried;
    int tried_cnt = 0;
    for (int i = 0; i < cnt; ++i) {
      auto [cb, v] = order[i];
      if (cb > best[depth]) break;  // sorted: the rest only get larger
      bool dup = false;
      for (int t = 0; t < tried_cnt && !dup; ++t)
        dup = transposition_is_automorphism(tried[t], v);
      if (dup) continue;
      if (cb < best[depth]) {
        best[depth] = cb;
        for (int j = depth + 1; j < n; ++j) best[j] = kUnset;
      }
      tried[tried_cnt++] = v;

      used |= std::uint64_t{1} << v;
      std::uint64_t unplaced = ~used & ((std::uint64_t{1} << n) - 1);  // n <= 32
      std::uint64_t w = unplaced;
      while (w) {
        int u = std::countr_zero(w);
        w &= w - 1;
        colbits[u] = (colbits[u] << 1) | ((adj[v] >> u) & 1u);
      }
      dfs(depth + 1);
      w = unplaced;
      while (w) {
        int u = std::countr_zero(w);
        w &= w - 1;
        colbits[u] >>= 1;
      }
      used &= ~(std::uint64_t{1} << v);
    }
  }

  // Code bytes: vertex count, then packed columns (MSB-first).
  std::string run() {
    build_cells();
    best.fill(kUnset);
    best[0] = 0;  // position 0 contributes no bits
    colbits.fill(0);
    used = 0;
    dfs(0);

    std::string out;
    out.push_back(static_cast<char>(n));
    int acc = 0, acc_bits = 0;
    for (int k = 1; k < n; ++k) {
      for (int i = 0; i < k; ++i) {
        int bit = static_cast<int>((best[k] >> (k - 1 - i)) & 1u);
        acc = (acc << 1) | bit;
        if (++acc_bits == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          acc_bits = 0;
        }
      }
    }
    if (acc_bits > 0) out.push_back(static_cast<char>(acc << (8 - acc_bits)));
    return out;
  }
};

}  // namespace

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalCode canonical_form(const Graph& g) {
  if (g.vertex_count() > kCanonicalVertexCap)
    throw std::invalid_argument("canonical_form: vertex count exceeds cap of " +
                                std::to_string(kCanonicalVertexCap));

  std::vector<std::string> component_codes;
  for (const auto& members : connected_components(g)) {
    ComponentCanon canon;
    canon.n = static_cast<int>(members.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < canon.n; ++i) local[members[i]] = i;
    for (int i = 0; i < canon.n; ++i)
      g.for_each_neighbor(members[i], [&](int u) {
        canon.adj[i] |= std::uint64_t{1} << local[u];
      });
    component_codes.push_back(canon.run());
  }
  std::sort(component_codes.begin(), component_codes.end());

  CanonicalCode code;
  code.bytes.push_back(static_cast<char>(g.vertex_count()));
  code.bytes.push_back(static_cast<char>(component_codes.size()));
  for (const auto& c : component_codes) code.bytes += c;
  return code;
}

}  // namespace srn
