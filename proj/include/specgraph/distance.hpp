#pragma once

#include <cmath>

#include "specgraph/spectrum.hpp"

namespace specgraph {

enum class Norm { L1, L2Sq };

inline const char* norm_name(Norm n) { return n == Norm::L1 ? "l1" : "l2sq"; }

/// Coordinatewise comparison of two descending-sorted spectra.
struct DistanceReport {
  double l1;
  double l2sq;
  std::vector<double> per_index;
};

namespace detail {

inline void require_same_order(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw std::invalid_argument("spectral distance: graphs have different orders");
}

/// Numeric spectra cannot certify distance zero; equal exact characteristic
/// polynomials can. Only consulted when the numeric distance is already tiny.
inline bool certified_cospectral(const Graph& g, const Graph& h) {
  if (g.order() > kMaxCharPolyOrder) return false;
  return char_poly(g) == char_poly(h);
}

inline double l1_of(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

inline double l2sq_of(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
  return d;
}

}  // namespace detail

inline DistanceReport distance_report(const Graph& g, const Graph& h) {
  detail::require_same_order(g, h);
  const auto sg = eigenvalues(g).values;
  const auto sh = eigenvalues(h).values;
  std::vector<double> diffs(sg.size());
  for (size_t i = 0; i < sg.size(); ++i) diffs[i] = std::abs(sg[i] - sh[i]);
  double l1 = 0, l2sq = 0;
  for (double d : diffs) {
    l1 += d;
    l2sq += d * d;
  }
  if (l1 > 0 && l1 < 1e-6 && detail::certified_cospectral(g, h)) {
    l1 = 0;
    l2sq = 0;
    std::fill(diffs.begin(), diffs.end(), 0.0);
  }
  return DistanceReport{l1, l2sq, std::move(diffs)};
}

/// sigma(G,H): l1 distance of sorted spectra; exactly 0 when the exact
/// characteristic polynomials coincide.
inline double sigma(const Graph& g, const Graph& h) {
  return distance_report(g, h).l1;
}

/// lambda(G,H): squared l2 distance of sorted spectra (no square root taken).
inline double lambda_sq(const Graph& g, const Graph& h) {
  return distance_report(g, h).l2sq;
}

/// sigma(K_n, G) = 2(n* - 1 + sum_{i=2}^{n*} lambda_i(G)), where n* counts
/// the eigenvalues of G that are >= -1.
inline double sigma_to_complete(int n, const Graph& g) {
  if (g.order() != n)
    throw std::invalid_argument("sigma_to_complete: order mismatch");
  if (n < 1) throw std::invalid_argument("sigma_to_complete: n < 1");
  const int nstar = count_eigenvalues_at_least(g, -1.0);
  const auto vals = eigenvalues(g).values;
  double tail = 0;
  for (int i = 1; i < nstar; ++i) tail += vals[static_cast<size_t>(i)];
  return 2 * (nstar - 1 + tail);
}

}  // namespace specgraph
