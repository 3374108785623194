#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "specgraph/graph.hpp"

namespace specgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact characteristic polynomial det(xI - A) of the adjacency matrix.
/// coeffs[k] is the coefficient of x^k; coeffs[n] = 1.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double eval(double x) const {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * x + static_cast<double>(*it);
    return acc;
  }

  bool operator==(const CharPoly&) const = default;
};

/// Largest order supported by the exact layer.
inline constexpr int kMaxCharPolyOrder = 20;

/// Berkowitz division-free recurrence: the characteristic polynomial of each
/// leading principal submatrix is obtained from the previous one through a
/// lower-triangular Toeplitz product.
inline CharPoly char_poly(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCharPolyOrder)
    throw std::invalid_argument("char_poly: order above exact-arithmetic limit");
  // c holds coefficients in descending order: c[0] x^deg + ... + c[deg]
  std::vector<BigInt> c{1};
  for (int m = 0; m < n; ++m) {
    // Toeplitz column: t[0]=1, t[1]=-a_mm, t[k]=-(R M^{k-2} S) for k>=2,
    // with R = row m, S = column m, M = leading m x m block.
    std::vector<BigInt> t(static_cast<size_t>(m) + 2);
    t[0] = 1;
    t[1] = g.has_edge(m, m) ? -1 : 0;  // diagonal is zero for simple graphs
    std::vector<BigInt> v(static_cast<size_t>(m));  // v = M^{k-2} S
    for (int i = 0; i < m; ++i) v[i] = g.has_edge(i, m) ? 1 : 0;
    for (int k = 2; k <= m + 1; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < m; ++i)
        if (g.has_edge(m, i)) dot += v[i];
      t[k] = -dot;
      if (k <= m) {
        std::vector<BigInt> nv(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
          BigInt s = 0;
          for (int j = 0; j < m; ++j)
            if (g.has_edge(i, j)) s += v[j];
          nv[i] = s;
        }
        v = std::move(nv);
      }
    }
    std::vector<BigInt> next(static_cast<size_t>(m) + 2);
    for (int i = 0; i <= m + 1; ++i) {
      BigInt s = 0;
      for (int k = 0; k <= i && k <= m + 1; ++k)
        if (i - k <= m) s += t[k] * c[i - k];
      next[i] = s;
    }
    c = std::move(next);
  }
  std::vector<BigInt> asc(c.rbegin(), c.rend());
  return CharPoly{std::move(asc)};
}

/// Exact multiplicity of the integer r as a root, by repeated synthetic
/// division.
inline int integer_root_multiplicity(const CharPoly& p, long r) {
  int mult = 0;
  std::vector<BigInt> desc(p.coeffs.rbegin(), p.coeffs.rend());
  while (desc.size() > 1) {
    std::vector<BigInt> quot(desc.size() - 1);
    BigInt carry = 0;
    for (size_t i = 0; i + 1 < desc.size(); ++i) {
      carry = carry * r + desc[i];
      quot[i] = carry;
    }
    if (carry * r + desc.back() != 0) break;
    desc = std::move(quot);
    ++mult;
  }
  return mult;
}

namespace detail {

using Poly = std::vector<BigInt>;  // ascending coefficients

inline int pdeg(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

inline void ptrim(Poly& p) { p.resize(static_cast<size_t>(pdeg(p) + 1)); }

inline Poly pderiv(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

inline void pprimitive(Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : p) c /= g;
}

/// Fraction-free pseudo-remainder of a by b, scaled so it is a positive
/// multiple of the true remainder.
inline Poly prem_pos(Poly a, const Poly& b) {
  const int db = pdeg(b);
  const BigInt lb = b[static_cast<size_t>(db)];
  int flips = 0;
  while (pdeg(a) >= db) {
    const int da = pdeg(a);
    const BigInt la = a[static_cast<size_t>(da)];
    for (auto& c : a) c *= lb;
    if (lb < 0) ++flips;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
    ptrim(a);
    if (a.empty()) break;
  }
  if (flips % 2 == 1)
    for (auto& c : a) c = -c;
  return a;
}

inline int sign_of(const BigInt& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

/// Distinct real roots of p strictly greater than t (Sturm chain with exact
/// integer arithmetic; sign-corrected pseudo-remainders).
inline int sturm_distinct_roots_above(const Poly& p, long t) {
  if (pdeg(p) <= 0) return 0;
  std::vector<Poly> chain;
  Poly p0 = p;
  ptrim(p0);
  pprimitive(p0);
  Poly p1 = pderiv(p0);
  pprimitive(p1);
  chain.push_back(p0);
  if (pdeg(p1) >= 0) chain.push_back(p1);
  while (chain.size() >= 2 && pdeg(chain.back()) > 0) {
    Poly r = prem_pos(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    pprimitive(r);
    chain.push_back(std::move(r));
  }
  std::vector<int> at_t, at_inf;
  for (const auto& q : chain) {
    BigInt val = 0;
    for (size_t i = q.size(); i-- > 0;) val = val * t + q[i];
    at_t.push_back(sign_of(val));
    at_inf.push_back(sign_of(q[static_cast<size_t>(pdeg(q))]));
  }
  return sign_changes(at_t) - sign_changes(at_inf);
}

/// gcd(p, p') up to content, as the tail of the Sturm-style remainder chain.
inline Poly pgcd_with_derivative(const Poly& p) {
  Poly a = p, b = pderiv(p);
  ptrim(a);
  pprimitive(a);
  pprimitive(b);
  while (pdeg(b) >= 0) {
    Poly r = prem_pos(a, b);
    pprimitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Exact division of a by the divisor b (must divide; Gauss's lemma keeps the
/// quotient integral for primitive operands).
inline Poly pdivide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  ptrim(rem);
  const int db = pdeg(b);
  const BigInt lb = b[static_cast<size_t>(db)];
  Poly quot(static_cast<size_t>(pdeg(rem) - db + 1));
  while (pdeg(rem) >= db) {
    const int dr = pdeg(rem);
    const BigInt q = rem[static_cast<size_t>(dr)] / lb;
    if (q * lb != rem[static_cast<size_t>(dr)])
      throw std::logic_error("pdivide_exact: inexact leading coefficient");
    quot[static_cast<size_t>(dr - db)] = q;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(dr - db + i)] -= q * b[static_cast<size_t>(i)];
    ptrim(rem);
    if (rem.empty()) break;
  }
  if (!rem.empty()) throw std::logic_error("pdivide_exact: nonzero remainder");
  return quot;
}

}  // namespace detail

/// Number of real roots of p strictly greater than the integer t, counted
/// with multiplicity. Each pass runs Sturm on the squarefree part and then
/// recurses into gcd(p, p'), which carries one multiplicity less per root.
inline int count_roots_above(const CharPoly& p, long t) {
  detail::Poly cur = p.coeffs;
  detail::ptrim(cur);
  detail::pprimitive(cur);
  int total = 0;
  while (detail::pdeg(cur) > 0) {
    detail::Poly g = detail::pgcd_with_derivative(cur);
    detail::Poly squarefree =
        detail::pdeg(g) > 0 ? detail::pdivide_exact(cur, g) : cur;
    total += detail::sturm_distinct_roots_above(squarefree, t);
    if (detail::pdeg(g) <= 0) break;
    cur = std::move(g);
  }
  return total;
}

/// Number of eigenvalues >= t for an integer threshold, fully exact.
inline int count_eigenvalues_at_least_exact(const CharPoly& p, long t) {
  return count_roots_above(p, t) + integer_root_multiplicity(p, t);
}

}  // namespace specgraph
