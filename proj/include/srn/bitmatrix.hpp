#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace srn {

// Symmetric adjacency bits, one packed row per vertex.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_(n == 0 ? 1 : (n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  bool test(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void set(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  void clear(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int row_count(int v) const {
    auto r = row(v);
    int c = 0;
    for (std::uint64_t w : r) c += std::popcount(w);
    return c;
  }

  int first_in_row(int v) const {
    auto r = row(v);
    for (int wi = 0; wi < words_; ++wi)
      if (r[wi]) return wi * 64 + std::countr_zero(r[wi]);
    return -1;
  }

  template <typename Fn>
  void for_each_in_row(int v, Fn&& fn) const {
    auto r = row(v);
    for (int wi = 0; wi < words_; ++wi) {
      std::uint64_t w = r[wi];
      while (w) {
        fn(wi * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  int n_ = 0;
  int words_ = 1;
  std::vector<std::uint64_t> bits_;
};

// Vertex subset with a fixed 256-vertex capacity, enough for every exact
// search this tool runs.
struct VertexSet {
  static constexpr int kCapacity = 256;
  std::uint64_t w[4] = {0, 0, 0, 0};

  static VertexSet all(int n) {
    VertexSet s;
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

  VertexSet intersect_row(std::span<const std::uint64_t> row) const {
    VertexSet out;
    int n = static_cast<int>(row.size());
    for (int i = 0; i < 4 && i < n; ++i) out.w[i] = w[i] & row[i];
    return out;
  }

  int first() const {
    for (int i = 0; i < 4; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        fn(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

}  // namespace srn
