#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specgraph {

/// Largest supported graph order (one machine word per adjacency row).
inline constexpr int kMaxOrder = 64;

/// Orders above this are outside the exhaustive-search comfort zone.
inline constexpr int kLargeOrder = 11;

/// Immutable simple graph on labeled vertices 0..n-1.
///
/// Adjacency is stored as n packed bit rows; row u bit v is 1 iff {u,v}
/// is an edge. The representation is validated on construction: symmetric,
/// zero diagonal, no bits at or above n.
class Graph {
public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(checked_order(n)), rows_(static_cast<size_t>(n), 0) {}

  static Graph from_rows(int n, std::vector<std::uint64_t> rows) {
    checked_order(n);
    if (static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("Graph::from_rows: row count != n");
    const std::uint64_t live = n == 64 ? ~0ull : ((1ull << n) - 1);
    for (int u = 0; u < n; ++u) {
      if (rows[u] & ~live)
        throw std::invalid_argument("Graph::from_rows: bits set beyond vertex range");
      if (rows[u] >> u & 1)
        throw std::invalid_argument("Graph::from_rows: loop on vertex");
      for (int v = u + 1; v < n; ++v)
        if (((rows[u] >> v) & 1) != ((rows[v] >> u) & 1))
          throw std::invalid_argument("Graph::from_rows: adjacency not symmetric");
    }
    return Graph(n, std::move(rows));
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    checked_order(n);
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph::from_edges: vertex out of range");
      if (u == v) throw std::invalid_argument("Graph::from_edges: loop");
      rows[u] |= 1ull << v;
      rows[v] |= 1ull << u;
    }
    return Graph(n, std::move(rows));
  }

  int order() const { return n_; }

  int edge_count() const {
    int total = 0;
    for (auto r : rows_) total += std::popcount(r);
    return total / 2;
  }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1; }

  int degree(int u) const { return std::popcount(rows_[u]); }

  std::uint64_t row(int u) const { return rows_[u]; }

  bool operator==(const Graph& other) const = default;

  /// Relabeled copy: vertex perm[i] of *this becomes vertex i.
  Graph permuted(const std::vector<int>& perm) const {
    std::vector<std::uint64_t> rows(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (has_edge(perm[i], perm[j])) rows[i] |= 1ull << j;
    return Graph(n_, std::move(rows));
  }

  /// Induced subgraph on the given vertices, in the given label order.
  Graph induced(const std::vector<int>& vertices) const {
    const int m = static_cast<int>(vertices.size());
    std::vector<std::uint64_t> rows(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (has_edge(vertices[i], vertices[j])) rows[i] |= 1ull << j;
    return Graph(m, std::move(rows));
  }

private:
  Graph(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {}

  static int checked_order(int n) {
    if (n < 0 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in [0, 64]");
    return n;
  }

  int n_;
  std::vector<std::uint64_t> rows_;
};

// ---------------------------------------------------------------------------
// Constructors

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  const std::uint64_t live = n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
  for (int u = 0; u < n; ++u) rows[u] = live & ~(1ull << u);
  return Graph::from_rows(n, std::move(rows));
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty())
    throw std::invalid_argument("complete_multipartite: no parts");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("complete_multipartite: part size < 1");
    n += p;
  }
  if (n > kMaxOrder) throw std::invalid_argument("complete_multipartite: order > 64");
  std::vector<int> part_of(static_cast<size_t>(n));
  int v = 0;
  for (size_t k = 0; k < parts.size(); ++k)
    for (int i = 0; i < parts[k]; ++i) part_of[v++] = static_cast<int>(k);
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (part_of[u] != part_of[w]) rows[u] |= 1ull << w;
  return Graph::from_rows(n, std::move(rows));
}

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n < 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n < 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Combinators

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw std::invalid_argument("disjoint_union: order > 64");
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  for (int u = 0; u < g.order(); ++u) rows[u] = g.row(u);
  for (int u = 0; u < h.order(); ++u)
    rows[g.order() + u] = h.row(u) << g.order();
  return Graph::from_rows(n, std::move(rows));
}

inline Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order(), n = ng + nh;
  if (n > kMaxOrder) throw std::invalid_argument("join: order > 64");
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  const std::uint64_t hmask = (nh == 64 ? ~0ull : (1ull << nh) - 1) << ng;
  const std::uint64_t gmask = ng == 64 ? ~0ull : (1ull << ng) - 1;
  for (int u = 0; u < ng; ++u) rows[u] = g.row(u) | hmask;
  for (int u = 0; u < nh; ++u) rows[ng + u] = (h.row(u) << ng) | gmask;
  return Graph::from_rows(n, std::move(rows));
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t live = n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
  std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) rows[u] = live & ~g.row(u) & ~(1ull << u);
  return Graph::from_rows(n, std::move(rows));
}

inline Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
    throw std::invalid_argument("delete_edge: {u,v} is not an edge");
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<size_t>(g.order()));
  for (int w = 0; w < g.order(); ++w) rows.push_back(g.row(w));
  rows[u] &= ~(1ull << v);
  rows[v] &= ~(1ull << u);
  return Graph::from_rows(g.order(), std::move(rows));
}

inline Graph add_isolated(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("add_isolated: t < 0");
  return disjoint_union(g, Graph(t));
}

/// t-fold disjoint union of g.
inline Graph union_copies(int t, const Graph& g) {
  Graph out(0);
  for (int i = 0; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

/// t-fold join of g with itself.
inline Graph join_copies(int t, const Graph& g) {
  if (t < 1) throw std::invalid_argument("join_copies: t < 1");
  Graph out = g;
  for (int i = 1; i < t; ++i) out = join(out, g);
  return out;
}

// ---------------------------------------------------------------------------
// Structure queries

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::uint64_t seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen >> s & 1) continue;
    std::uint64_t comp = 1ull << s;
    for (;;) {
      std::uint64_t frontier = 0;
      std::uint64_t scan = comp;
      while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        frontier |= g.row(u);
      }
      if ((frontier | comp) == comp) break;
      comp |= frontier;
    }
    seen |= comp;
    std::vector<int> verts;
    while (comp) {
      verts.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    comps.push_back(std::move(verts));
  }
  return comps;
}

struct MultipartiteShape {
  std::vector<int> parts;  // sorted ascending
  int isolated;            // count of degree-0 vertices
};

/// If the non-isolated vertices induce a complete multipartite graph, return
/// its part sizes (sorted) and the isolated count. Non-adjacency restricted
/// to the non-isolated vertices must be an equivalence relation; its classes
/// are the parts. Graphs with no edges at all yield absent.
inline std::optional<MultipartiteShape> is_complete_multipartite_plus_isolated(const Graph& g) {
  std::vector<int> core;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) core.push_back(v);
  if (core.empty()) return std::nullopt;
  std::uint64_t core_mask = 0;
  for (int v : core) core_mask |= 1ull << v;
  // u,v in the same part iff non-adjacent iff identical core neighborhoods.
  for (int u : core)
    for (int v : core) {
      if (u == v) continue;
      const bool same_row = (g.row(u) & core_mask) == (g.row(v) & core_mask);
      if (g.has_edge(u, v) == same_row) return std::nullopt;
    }
  std::vector<std::uint64_t> reps;
  std::vector<int> sizes;
  for (int u : core) {
    const std::uint64_t key = g.row(u) & core_mask;
    auto it = std::find(reps.begin(), reps.end(), key);
    if (it == reps.end()) {
      reps.push_back(key);
      sizes.push_back(1);
    } else {
      ++sizes[it - reps.begin()];
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return MultipartiteShape{std::move(sizes), g.order() - static_cast<int>(core.size())};
}

/// Equality case of the energy bound: a complete bipartite graph (so m >= 1)
/// plus arbitrarily many isolated vertices.
inline bool is_complete_bipartite_plus_isolated(const Graph& g) {
  auto shape = is_complete_multipartite_plus_isolated(g);
  return shape && shape->parts.size() == 2;
}

inline bool is_complete_graph(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace specgraph
