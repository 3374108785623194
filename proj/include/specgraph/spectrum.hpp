#pragma once

#include <cmath>

#include "specgraph/charpoly.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

/// Adjacency eigenvalues sorted descending, with a conservative per-value
/// absolute error bound.
struct Spectrum {
  std::vector<double> values;
  double abs_err;
};

inline double abs_err_for_order(int n) { return n <= 12 ? 1e-10 : 1e-9; }

/// Numeric values within this distance of an integer threshold are resolved
/// through the exact characteristic-polynomial layer.
inline constexpr double kIntegerBand = 1e-7;

namespace detail {

/// Cyclic Jacobi on a dense symmetric matrix (row-major, n x n), deterministic
/// (p,q) sweep order. Stops when the off-diagonal Frobenius mass drops below
/// 1e-14 times the matrix Frobenius norm.
inline void jacobi_eigenvalues(std::vector<double>& a, int n) {
  double frob2 = 0;
  for (int i = 0; i < n * n; ++i) frob2 += a[i] * a[i];
  if (frob2 == 0) return;
  const double stop2 = 1e-28 * frob2;
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off2 = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += 2 * a[p * n + q] * a[p * n + q];
    if (off2 <= stop2) return;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
  }
  throw std::runtime_error("jacobi_eigenvalues: no convergence in 50 sweeps");
}

}  // namespace detail

inline Spectrum eigenvalues(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) a[u * static_cast<size_t>(n) + v] = 1.0;
  detail::jacobi_eigenvalues(a, n);
  std::vector<double> vals(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vals[i] = a[i * static_cast<size_t>(n) + i];
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return Spectrum{std::move(vals), abs_err_for_order(n)};
}

inline double energy(const Graph& g) {
  double e = 0;
  for (double v : eigenvalues(g).values) e += std::abs(v);
  return e;
}

// ---------------------------------------------------------------------------
// Closed-form spectra

inline Spectrum closed_form_spectrum_empty(int n) {
  if (n < 0) throw std::invalid_argument("closed_form_spectrum_empty: n < 0");
  return Spectrum{std::vector<double>(static_cast<size_t>(n), 0.0), 0.0};
}

/// Spec(K_n) = {n-1, -1 repeated n-1 times}.
inline Spectrum closed_form_spectrum_complete(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_spectrum_complete: n < 1");
  std::vector<double> vals(static_cast<size_t>(n), -1.0);
  vals[0] = n - 1;
  return Spectrum{std::move(vals), 0.0};
}

/// Spec(K_{p,q}) = {sqrt(pq), 0 repeated p+q-2, -sqrt(pq)}.
inline Spectrum closed_form_spectrum_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("closed_form_spectrum_complete_bipartite: part < 1");
  std::vector<double> vals(static_cast<size_t>(p + q), 0.0);
  vals.front() = std::sqrt(static_cast<double>(p) * q);
  vals.back() = -vals.front();
  return Spectrum{std::move(vals), 0.0};
}

/// Spec(K_n \ e) = {(n-3+sqrt(n^2+2n-7))/2, 0, -1 repeated n-3,
///                  (n-3-sqrt(n^2+2n-7))/2} for n >= 3; K_2 \ e = 2K_1.
inline Spectrum closed_form_spectrum_complete_minus_edge(int n) {
  if (n < 2)
    throw std::invalid_argument("closed_form_spectrum_complete_minus_edge: n < 2");
  if (n == 2) return closed_form_spectrum_empty(2);
  const double root = std::sqrt(static_cast<double>(n) * n + 2.0 * n - 7.0);
  std::vector<double> vals;
  vals.push_back((n - 3 + root) / 2);
  vals.push_back(0.0);
  vals.insert(vals.end(), static_cast<size_t>(n - 3), -1.0);
  vals.push_back((n - 3 - root) / 2);
  return Spectrum{std::move(vals), 0.0};
}

// ---------------------------------------------------------------------------
// Threshold counting

/// Number of eigenvalues >= threshold. Integer thresholds at orders within the
/// exact layer are resolved through Sturm counts plus exact root multiplicity;
/// otherwise plain numeric comparison against the Spectrum.
inline int count_eigenvalues_at_least(const Graph& g, double threshold) {
  const double rounded = std::round(threshold);
  if (std::abs(threshold - rounded) < 1e-12 && g.order() <= kMaxCharPolyOrder) {
    const CharPoly p = char_poly(g);
    return count_eigenvalues_at_least_exact(p, static_cast<long>(rounded));
  }
  int count = 0;
  for (double v : eigenvalues(g).values)
    if (v >= threshold) ++count;
  return count;
}

}  // namespace specgraph
