#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "specgraph/charpoly.hpp"
#include "specgraph/graph.hpp"

using namespace specgraph;

namespace {

std::vector<long> as_longs(const CharPoly& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs) out.push_back(static_cast<long>(c));
  return out;
}

}  // namespace

TEST_CASE("hand-expanded characteristic polynomials") {
  // det(xI - A(K3)) = x^3 - 3x - 2
  CHECK(as_longs(char_poly(complete(3))) == std::vector<long>{-2, -3, 0, 1});
  // det(xI - A(P3)) = x^3 - 2x
  CHECK(as_longs(char_poly(path(3))) == std::vector<long>{0, -2, 0, 1});
  CHECK(as_longs(char_poly(Graph(4))) == std::vector<long>{0, 0, 0, 0, 1});
}

TEST_CASE("classic cospectral pair at order five") {
  // C4 + K1 and K_{1,4} share x^5 - 4x^3
  const CharPoly a = char_poly(add_isolated(cycle(4), 1));
  const CharPoly b = char_poly(complete_multipartite({1, 4}));
  CHECK(a == b);
  CHECK(as_longs(a) == std::vector<long>{0, 0, 0, -4, 0, 1});
}

TEST_CASE("trace coefficients") {
  // c_{n-1} = 0 (zero trace), c_{n-2} = -m, for random graphs
  std::mt19937 rng(5);
  for (int n = 2; n <= 10; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() & 1) edges.emplace_back(u, v);
      const Graph g = Graph::from_edges(n, edges);
      const CharPoly p = char_poly(g);
      REQUIRE(p.degree() == n);
      CHECK(p.coeffs[static_cast<size_t>(n)] == 1);
      CHECK(p.coeffs[static_cast<size_t>(n - 1)] == 0);
      CHECK(p.coeffs[static_cast<size_t>(n - 2)] == -g.edge_count());
    }
}

TEST_CASE("integer root multiplicities") {
  CHECK(integer_root_multiplicity(char_poly(complete(4)), -1) == 3);
  CHECK(integer_root_multiplicity(char_poly(complete_multipartite({2, 3})), 0) == 3);
  CHECK(integer_root_multiplicity(char_poly(path(3)), 1) == 0);
  CHECK(integer_root_multiplicity(char_poly(Graph(6)), 0) == 6);
}

TEST_CASE("exact counts above integer thresholds") {
  // Spec(K_n) = {n-1, -1 x (n-1)}
  for (int n = 2; n <= 8; ++n) {
    const CharPoly p = char_poly(complete(n));
    CHECK(count_roots_above(p, 0) == 1);
    CHECK(count_roots_above(p, -1) == 1);
    CHECK(count_eigenvalues_at_least_exact(p, -1) == n);
  }
  // Spec(K_{p,q}) = {sqrt(pq), 0 x (p+q-2), -sqrt(pq)}
  const CharPoly kpq = char_poly(complete_multipartite({2, 3}));
  CHECK(count_roots_above(kpq, 0) == 1);
  CHECK(count_eigenvalues_at_least_exact(kpq, 0) == 4);
  // 2K_{1,2}: eigenvalues sqrt(2), sqrt(2), 0, 0, -sqrt(2), -sqrt(2);
  // the repeated irrational roots exercise the multiplicity recursion
  const Graph two_stars =
      disjoint_union(complete_multipartite({1, 2}), complete_multipartite({1, 2}));
  const CharPoly p = char_poly(two_stars);
  CHECK(count_roots_above(p, 0) == 2);
  CHECK(count_roots_above(p, -1) == 4);
  CHECK(count_roots_above(p, 1) == 2);
  CHECK(count_roots_above(p, 2) == 0);
  CHECK(integer_root_multiplicity(p, 0) == 2);
}

TEST_CASE("order limit") {
  CHECK_THROWS_AS(char_poly(complete(21)), std::invalid_argument);
}
