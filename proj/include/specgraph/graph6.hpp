#pragma once

#include <string>

#include "specgraph/graph.hpp"

namespace specgraph {

/// graph6 short form: first byte n+63 (n <= 62), then the upper triangle of
/// the adjacency matrix read column by column (column j, rows 0..j-1, for
/// j = 1..n-1), zero-padded to a multiple of 6 bits, each 6-bit group + 63.
inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6_encode: n > 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph graph6_decode(const std::string& bytes) {
  if (bytes.empty()) throw std::invalid_argument("graph6_decode: empty input");
  for (char c : bytes)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6_decode: byte outside [63, 126]");
  const int n = bytes[0] - 63;
  if (n > 62) throw std::invalid_argument("graph6_decode: unsupported size prefix");
  const int nbits = n * (n - 1) / 2;
  const size_t expect = 1 + static_cast<size_t>((nbits + 5) / 6);
  if (bytes.size() < expect) throw std::invalid_argument("graph6_decode: truncated input");
  if (bytes.size() > expect) throw std::invalid_argument("graph6_decode: trailing garbage");
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = bytes[1 + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) {
        rows[i] |= 1ull << j;
        rows[j] |= 1ull << i;
      }
    }
  // padding bits must be zero
  for (int b = nbits; b < 6 * static_cast<int>(expect - 1); ++b)
    if ((bytes[1 + b / 6] - 63) >> (5 - b % 6) & 1)
      throw std::invalid_argument("graph6_decode: nonzero padding bits");
  return Graph::from_rows(n, std::move(rows));
}

}  // namespace specgraph
