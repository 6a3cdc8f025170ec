#pragma once

// graph6 short form (no header line): a size prefix followed by the upper
// triangle, column by column, packed six bits per printable byte.

#include <cstddef>
#include <string>
#include <string_view>

#include "spectral_class/graph.hpp"

namespace spectral_class {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

inline constexpr int kG6Bias = 63;
inline constexpr int kG6Max = 126;

inline int g6_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error("unexpected end of record", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kG6Bias || c > kG6Max)
    throw Graph6Error("character code " + std::to_string(c) + " outside 63..126", pos);
  return c - kG6Bias;
}

}  // namespace detail

inline Graph from_graph6(std::string_view text) {
  using detail::g6_value;
  if (text.empty()) throw Graph6Error("empty record", 0);
  if (text.starts_with(">>")) throw Graph6Error("header lines are not supported", 0);

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') throw Graph6Error("malformed length prefix", 1);
    for (int k = 0; k < 3; ++k) n = (n << 6) | g6_value(text, 1 + k);
    if (n <= 62) throw Graph6Error("malformed length prefix (non-minimal size)", 1);
    pos = 4;
  } else {
    n = g6_value(text, 0);
    pos = 1;
  }
  if (n > kMaxVertices)
    throw Graph6Error("vertex count " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxVertices),
                      0);

  Graph g(n);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = g6_value(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const int last = g6_value(text, pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw Graph6Error("nonzero padding bits", pos + bytes - 1);
  }
  if (text.size() > pos + bytes) throw Graph6Error("trailing garbage", pos + bytes);
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Bias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + detail::kG6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kG6Bias));
  return out;
}

}  // namespace spectral_class
