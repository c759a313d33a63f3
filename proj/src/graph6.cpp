#include "srn/graph6.hpp"

#include <sstream>

namespace srn {

namespace {
constexpr int kCharLo = 63;   // '?'
constexpr int kCharHi = 126;  // '~'
}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  if (n > 258047) throw std::invalid_argument("graph6_encode: graph too large");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kCharLo));
  } else {
    out.push_back(static_cast<char>(kCharHi));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kCharLo));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kCharLo));
    out.push_back(static_cast<char>((n & 63) + kCharLo));
  }

  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int acc = 0, acc_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++acc_bits == 6) {
        out.push_back(static_cast<char>(acc + kCharLo));
        acc = 0;
        acc_bits = 0;
      }
    }
  }
  if (acc_bits > 0) out.push_back(static_cast<char>((acc << (6 - acc_bits)) + kCharLo));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw Graph6Error("graph6: empty input", 0);

  std::size_t pos = 0;
  auto next6 = [&](const char* what) -> int {
    if (pos >= text.size()) throw Graph6Error(std::string("graph6: truncated ") + what, pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kCharLo || c > kCharHi)
      throw Graph6Error("graph6: character out of range", pos);
    ++pos;
    return c - kCharLo;
  };

  long long n;
  if (static_cast<unsigned char>(text[0]) == kCharHi) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kCharHi)
      throw Graph6Error("graph6: >=258048 vertices not supported", 1);
    ++pos;
    long long a = next6("vertex count");
    long long b = next6("vertex count");
    long long c = next6("vertex count");
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next6("vertex count");
  }

  Graph g(static_cast<int>(n));
  int acc = 0, acc_bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (acc_bits == 0) {
        acc = next6("adjacency bits");
        acc_bits = 6;
      }
      if ((acc >> (acc_bits - 1)) & 1) g.add_edge(i, j);
      --acc_bits;
    }
  }
  // padding bits must be zero and nothing may follow
  if (acc_bits > 0 && (acc & ((1 << acc_bits) - 1)) != 0)
    throw Graph6Error("graph6: nonzero padding bits", pos - 1);
  if (pos != text.size()) throw Graph6Error("graph6: trailing characters", pos);
  return g;
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph edge_list_decode(std::istream& in) {
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing `n m` header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header values");
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    long long u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: truncated at edge " + std::to_string(k));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge list: vertex out of range at edge " + std::to_string(k));
    if (u == v) throw std::invalid_argument("edge list: self-loop at edge " + std::to_string(k));
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw std::invalid_argument("edge list: duplicate edge at edge " + std::to_string(k));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph edge_list_decode(const std::string& text) {
  std::istringstream in(text);
  return edge_list_decode(in);
}

}  // namespace srn
