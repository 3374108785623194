#pragma once

#include "specgraph/distance.hpp"
#include "specgraph/enumerate.hpp"

namespace specgraph {

/// Minimizer ties within this distance of the minimum are all reported.
inline constexpr double kTieTolerance = 1e-7;

struct CsResult {
  double value = 0;
  std::vector<CanonicalForm> minimizers;  // sorted, all non-isomorphic to the query
  std::size_t graphs_scanned = 0;
  bool exact_zero = false;  // a char-poly-equal non-isomorphic mate exists
};

/// Brute-force cs(G): minimum spectral distance from g to every
/// non-isomorphic candidate in the set, with the complete tie set.
///
/// Each candidate's distance is computed independently of the partitioning,
/// and the reduction is a plain min plus a threshold filter, so the result is
/// identical for any worker count.
inline CsResult cospectrality(const Graph& g, Norm norm, const GraphSet& candidates,
                              int jobs = 1) {
  if (g.order() != candidates.order)
    throw std::invalid_argument("cospectrality: candidate order mismatch");
  if (g.order() < 2)
    throw std::invalid_argument("cospectrality: cs undefined below order 2");
  const_cast<GraphSet&>(candidates).ensure_spectra(jobs);
  const CanonicalForm self = canonical_form(g);
  const auto sg = eigenvalues(g).values;

  const std::size_t count = candidates.size();
  std::vector<double> dist(count, -1.0);
  parallel_chunks(count, jobs, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (candidates.canon[i] == self) continue;
      dist[i] = norm == Norm::L1 ? detail::l1_of(sg, candidates.spectra[i])
                                 : detail::l2sq_of(sg, candidates.spectra[i]);
    }
  });

  CsResult result;
  result.graphs_scanned = count;
  double best = -1;
  for (std::size_t i = 0; i < count; ++i) {
    if (dist[i] < 0) continue;
    if (best < 0 || dist[i] < best) best = dist[i];
  }
  if (best < 0)
    throw std::invalid_argument("cospectrality: no non-isomorphic candidate in stream");

  // A numerically tiny minimum may be an exact zero; certify via char polys.
  if (best < 1e-6 && g.order() <= kMaxCharPolyOrder) {
    const CharPoly pg = char_poly(g);
    for (std::size_t i = 0; i < count; ++i) {
      if (dist[i] < 0 || dist[i] >= 1e-6) continue;
      if (char_poly(candidates.graphs[i]) == pg) {
        dist[i] = 0;
        result.exact_zero = true;
      }
    }
    if (result.exact_zero) best = 0;
  }

  result.value = best;
  for (std::size_t i = 0; i < count; ++i)
    if (dist[i] >= 0 && dist[i] <= best + kTieTolerance)
      result.minimizers.push_back(candidates.canon[i]);
  std::sort(result.minimizers.begin(), result.minimizers.end());
  return result;
}

// ---------------------------------------------------------------------------
// Closed forms for the five studied families

enum class CsFamily {
  Empty,         // nK1
  SingleEdge,    // K2 + (n-2)K1
  Complete,      // K_n
  Balanced,      // K_{n,n}
  NearBalanced,  // K_{n,n+1}
};

struct ClosedFormCs {
  Graph graph;                        // the family instance itself
  double value_l1;
  double value_l2sq;
  std::vector<Graph> minimizers_l1;   // every class attaining the minimum
  std::vector<Graph> minimizers_l2;
};

/// cs values and minimizer families for nK1, K2+(n-2)K1, K_n, K_{n,n} and
/// K_{n,n+1}, under both norms. The parameter n is the family index (the
/// graph order for the first three, the part size for the bipartite two).
inline ClosedFormCs cs_closed_form(CsFamily family, int n) {
  const double sqrt2 = std::sqrt(2.0);
  switch (family) {
    case CsFamily::Empty: {
      if (n < 2) throw std::invalid_argument("cs_closed_form: nK1 needs n >= 2");
      Graph mate = add_isolated(complete(2), n - 2);
      return ClosedFormCs{Graph(n), 2.0, 2.0, {mate}, {mate}};
    }
    case CsFamily::SingleEdge: {
      if (n < 2)
        throw std::invalid_argument("cs_closed_form: K2+(n-2)K1 needs n >= 2");
      Graph self = add_isolated(complete(2), n - 2);
      if (n == 2)  // cs(K_2) = sigma(K_2, 2K_1) = 2, stated separately
        return ClosedFormCs{self, 2.0, 2.0, {Graph(2)}, {Graph(2)}};
      Graph mate = add_isolated(path(3), n - 3);
      const double v1 = 2 * (sqrt2 - 1);
      return ClosedFormCs{self, v1, v1 * v1 / 2, {mate}, {mate}};
    }
    case CsFamily::Complete: {
      if (n < 2) throw std::invalid_argument("cs_closed_form: K_n needs n >= 2");
      Graph minus_e = delete_edge(complete(n), 0, 1);
      Graph split = add_isolated(complete(n - 1), 1);
      const double l2 =
          n * n + n - n * std::sqrt(static_cast<double>(n) * n + 2.0 * n - 7.0) - 2;
      std::vector<Graph> l1_mins;
      if (is_isomorphic(minus_e, split)) {  // n = 2: both mates are 2K1
        l1_mins = {minus_e};
      } else {
        l1_mins = {split, minus_e};
      }
      return ClosedFormCs{complete(n), 2.0, l2, std::move(l1_mins), {minus_e}};
    }
    case CsFamily::Balanced: {
      if (n < 2) throw std::invalid_argument("cs_closed_form: K_{n,n} needs n >= 2");
      const double v1 = 2 * (n - std::sqrt(static_cast<double>(n) * n - 1.0));
      Graph mate = complete_multipartite({n - 1, n + 1});
      return ClosedFormCs{complete_multipartite({n, n}), v1, v1 * v1 / 2, {mate}, {mate}};
    }
    case CsFamily::NearBalanced: {
      if (n < 2)
        throw std::invalid_argument("cs_closed_form: K_{n,n+1} needs n >= 2");
      const double nn = static_cast<double>(n) * n + n;
      const double v1 = 2 * (std::sqrt(nn) - std::sqrt(nn - 2));
      std::vector<Graph> mates{complete_multipartite({n - 1, n + 2})};
      // n = 2: the distance depends only on the spectrum, so K_{1,4}'s
      // cospectral mate C4+K1 attains the same minimum
      if (n == 2) mates.push_back(add_isolated(cycle(4), 1));
      return ClosedFormCs{complete_multipartite({n, n + 1}), v1, v1 * v1 / 2, mates,
                          mates};
    }
  }
  throw std::invalid_argument("cs_closed_form: unknown family");
}

// ---------------------------------------------------------------------------

/// cs_n: the maximum of cs(G) over all isomorphism classes of order n,
/// together with every class attaining it.
struct CsMaxResult {
  double value = 0;
  std::vector<CanonicalForm> argmax;  // sorted
};

inline CsMaxResult cs_max(int n, Norm norm, const GraphSet& all, int jobs = 1,
                          bool long_run = false) {
  if (n < 2 || n > 8 || (n == 8 && !long_run))
    throw std::invalid_argument(
        "cs_max: order must be in [2, 7] (8 requires the long-run flag)");
  if (all.order != n) throw std::invalid_argument("cs_max: stream order mismatch");
  const_cast<GraphSet&>(all).ensure_spectra(jobs);
  const std::size_t count = all.size();
  std::vector<double> cs_of(count, 0.0);
  parallel_chunks(count, jobs, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      double best = -1;
      for (std::size_t j = 0; j < count; ++j) {
        if (j == i) continue;
        const double d = norm == Norm::L1
                             ? detail::l1_of(all.spectra[i], all.spectra[j])
                             : detail::l2sq_of(all.spectra[i], all.spectra[j]);
        if (best < 0 || d < best) best = d;
      }
      cs_of[i] = best;
    }
  });
  CsMaxResult out;
  for (double v : cs_of) out.value = std::max(out.value, v);
  for (std::size_t i = 0; i < count; ++i)
    if (cs_of[i] >= out.value - kTieTolerance) out.argmax.push_back(all.canon[i]);
  std::sort(out.argmax.begin(), out.argmax.end());
  return out;
}

/// Proposition criterion for cs(K_{m,n}) > 0: among all positive integer
/// factorizations xy = mn, the minimum of x+y must be attained at {m,n}.
inline bool kmn_positive(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("kmn_positive: parts must be >= 1");
  const long prod = static_cast<long>(m) * n;
  for (long x = 1; x * x <= prod; ++x) {
    if (prod % x != 0) continue;
    if (x + prod / x < m + n) return false;
  }
  return true;
}

}  // namespace specgraph
