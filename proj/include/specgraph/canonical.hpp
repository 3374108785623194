#pragma once

#include <array>
#include <compare>
#include <string>

#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"

namespace specgraph {

/// graph6 encoding of the relabeling that maximizes the upper-triangle bit
/// string read in column order. Equal bytes iff isomorphic graphs.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

/// Search state for the maximal-adjacency-string relabeling.
///
/// Positions are filled left to right; placing vertex v at position k reveals
/// column k of the relabeled upper triangle (adjacency of v to the already
/// placed vertices, top down). Columns are compared against the best known
/// prefix; branches that go lexicographically below it are cut. Vertices that
/// are twins of an already-tried sibling (identical neighborhoods off the
/// pair) lead to identical subtrees and are skipped.
class Canonicalizer {
public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) order_[v] = v;
    refine_order();
  }

  std::vector<int> run() {
    best_len_ = 0;
    search(0, 0);
    return {best_perm_.begin(), best_perm_.begin() + n_};
  }

private:
  // Sort vertices by an equitable-refinement color so that high-degree,
  // structurally distinguished vertices are tried first. Pure heuristic: it
  // seeds a strong initial candidate, correctness comes from the search.
  void refine_order() {
    std::vector<int> color(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) color[v] = g_.degree(v);
    for (int round = 0; round < 3; ++round) {
      // signature: own color plus sorted multiset of neighbor colors
      std::vector<std::vector<int>> sig(static_cast<size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        sig[v].push_back(color[v]);
        std::uint64_t nb = g_.row(v);
        std::vector<int> ns;
        while (nb) {
          ns.push_back(color[std::countr_zero(nb)]);
          nb &= nb - 1;
        }
        std::sort(ns.begin(), ns.end(), std::greater<>());
        sig[v].insert(sig[v].end(), ns.begin(), ns.end());
      }
      std::vector<std::vector<int>> uniq = sig;
      std::sort(uniq.begin(), uniq.end(), std::greater<>());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      std::vector<int> next(static_cast<size_t>(n_));
      for (int v = 0; v < n_; ++v)
        next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v],
                                                    std::greater<>()) -
                                   uniq.begin());
      if (next == color) break;
      color = std::move(next);
    }
    std::stable_sort(order_.begin(), order_.begin() + n_,
                     [&](int a, int b) { return color[a] < color[b]; });
  }

  void search(int k, std::uint64_t placed) {
    if (k == n_) {
      best_perm_ = perm_;
      return;
    }
    std::uint64_t tried = 0;
    for (int idx = 0; idx < n_; ++idx) {
      const int v = order_[idx];
      if (placed >> v & 1) continue;
      if (is_twin_of_tried(v, tried, placed)) continue;
      tried |= 1ull << v;
      // column k bits: adjacency to positions 0..k-1, row 0 most significant
      std::uint64_t col = 0;
      const std::uint64_t rv = g_.row(v);
      for (int i = 0; i < k; ++i)
        col |= static_cast<std::uint64_t>(rv >> perm_[i] & 1) << (63 - i);
      if (k < best_len_) {
        if (col < best_cols_[k]) continue;
        if (col > best_cols_[k]) {
          best_cols_[k] = col;
          best_len_ = k + 1;
        }
      } else {
        best_cols_[k] = col;
        best_len_ = k + 1;
      }
      perm_[k] = v;
      search(k + 1, placed | 1ull << v);
    }
  }

  bool is_twin_of_tried(int v, std::uint64_t tried, std::uint64_t placed) const {
    std::uint64_t scan = tried & ~placed;
    const std::uint64_t rv = g_.row(v);
    while (scan) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      const std::uint64_t off = ~(1ull << u | 1ull << v);
      if ((rv & off) == (g_.row(u) & off)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxOrder> order_{};
  std::array<int, kMaxOrder> perm_{};
  std::array<int, kMaxOrder> best_perm_{};
  std::array<std::uint64_t, kMaxOrder> best_cols_{};
  int best_len_ = 0;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return CanonicalForm{graph6_encode(g)};
  detail::Canonicalizer c(g);
  return CanonicalForm{graph6_encode(g.permuted(c.run()))};
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && canonical_form(g) == canonical_form(h);
}

}  // namespace specgraph
