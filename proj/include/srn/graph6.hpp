#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "srn/graph.hpp"

namespace srn {

// Malformed graph6 input, with the byte offset of the offending character.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& msg, std::size_t offset_)
      : std::runtime_error(msg + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
  std::size_t offset;
};

// Standard graph6 text encoding (bit-exact; supports n up to 258047).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

// Plain edge-list format: first line "n m", then m lines "u v", 0-based.
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::istream& in);
Graph edge_list_decode(const std::string& text);

}  // namespace srn
