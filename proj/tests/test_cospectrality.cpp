#include <catch2/catch_amalgamated.hpp>

#include "specgraph/cospectrality.hpp"

using namespace specgraph;

namespace {

GraphUniverse& universe() {
  static GraphUniverse u(2);
  return u;
}

std::vector<CanonicalForm> canon_set(const std::vector<Graph>& graphs) {
  std::vector<CanonicalForm> out;
  for (const auto& g : graphs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("brute-force cs of small reference graphs") {
  auto& u = universe();

  const CsResult e4 = cospectrality(Graph(4), Norm::L1, u.get(4));
  CHECK(std::abs(e4.value - 2) <= 1e-9);
  CHECK(e4.minimizers == canon_set({add_isolated(complete(2), 2)}));
  CHECK(e4.graphs_scanned == 11);
  CHECK_FALSE(e4.exact_zero);

  const CsResult k4 = cospectrality(complete(4), Norm::L1, u.get(4));
  CHECK(std::abs(k4.value - 2) <= 1e-9);
  CHECK(k4.minimizers == canon_set({add_isolated(complete(3), 1),
                                    delete_edge(complete(4), 0, 1)}));

  // one edge: cs = 2(sqrt2 - 1), minimizer P3 + K1
  const CsResult k2 = cospectrality(add_isolated(complete(2), 2), Norm::L1, u.get(4));
  CHECK(std::abs(k2.value - 2 * (std::sqrt(2.0) - 1)) <= 1e-9);
  CHECK(k2.minimizers == canon_set({add_isolated(path(3), 1)}));
}

TEST_CASE("cospectral mate gives an exact zero") {
  auto& u = universe();
  const CsResult r = cospectrality(complete_multipartite({1, 4}), Norm::L1, u.get(5));
  CHECK(r.value == 0.0);
  CHECK(r.exact_zero);
  CHECK(r.minimizers == canon_set({add_isolated(cycle(4), 1)}));
}

TEST_CASE("both norms rank the same minimizer when it is unique") {
  auto& u = universe();
  const CsResult l1 = cospectrality(complete_multipartite({2, 2}), Norm::L1, u.get(4));
  const CsResult l2 = cospectrality(complete_multipartite({2, 2}), Norm::L2Sq, u.get(4));
  CHECK(l1.minimizers == canon_set({complete_multipartite({1, 3})}));
  CHECK(l2.minimizers == l1.minimizers);
  CHECK(std::abs(l2.value - l1.value * l1.value / 2) <= 1e-9);
}

TEST_CASE("closed-form values and minimizer families") {
  const auto e = cs_closed_form(CsFamily::Empty, 6);
  CHECK(e.value_l1 == 2.0);
  CHECK(is_isomorphic(e.minimizers_l1[0], add_isolated(complete(2), 4)));

  const auto k2 = cs_closed_form(CsFamily::SingleEdge, 2);
  CHECK(k2.value_l1 == 2.0);
  CHECK(is_isomorphic(k2.minimizers_l1[0], Graph(2)));

  const auto edge = cs_closed_form(CsFamily::SingleEdge, 5);
  CHECK(std::abs(edge.value_l1 - 2 * (std::sqrt(2.0) - 1)) <= 1e-12);
  CHECK(std::abs(edge.value_l2sq - 2 * std::pow(std::sqrt(2.0) - 1, 2)) <= 1e-12);

  const auto kn = cs_closed_form(CsFamily::Complete, 5);
  CHECK(kn.value_l1 == 2.0);
  CHECK(kn.minimizers_l1.size() == 2);
  CHECK(kn.minimizers_l2.size() == 1);
  CHECK(is_isomorphic(kn.minimizers_l2[0], delete_edge(complete(5), 0, 1)));
  // n = 2 collapses both l1 mates to the single class 2K1
  CHECK(cs_closed_form(CsFamily::Complete, 2).minimizers_l1.size() == 1);

  // cs(K_{4,4}) = 2(4 - sqrt 15), minimizer K_{3,5}
  const auto b4 = cs_closed_form(CsFamily::Balanced, 4);
  CHECK(std::abs(b4.value_l1 - 2 * (4 - std::sqrt(15.0))) <= 1e-12);
  CHECK(is_isomorphic(b4.minimizers_l1[0], complete_multipartite({3, 5})));

  // cs(K_{5,6}) = 2(sqrt 30 - sqrt 28), minimizer K_{4,7}
  const auto nb5 = cs_closed_form(CsFamily::NearBalanced, 5);
  CHECK(std::abs(nb5.value_l1 - 2 * (std::sqrt(30.0) - std::sqrt(28.0))) <= 1e-12);
  CHECK(is_isomorphic(nb5.minimizers_l1[0], complete_multipartite({4, 7})));

  CHECK_THROWS_AS(cs_closed_form(CsFamily::Empty, 1), std::invalid_argument);
}

TEST_CASE("closed forms agree with brute force at small orders") {
  auto& u = universe();
  struct Row { CsFamily fam; int param; int order; };
  const Row rows[] = {{CsFamily::Empty, 5, 5},       {CsFamily::SingleEdge, 6, 6},
                      {CsFamily::Complete, 6, 6},    {CsFamily::Balanced, 3, 6},
                      {CsFamily::NearBalanced, 3, 7}};
  for (const auto& row : rows) {
    const auto cf = cs_closed_form(row.fam, row.param);
    REQUIRE(cf.graph.order() == row.order);
    for (Norm norm : {Norm::L1, Norm::L2Sq}) {
      const CsResult r = cospectrality(cf.graph, norm, u.get(row.order), 2);
      CHECK(std::abs(r.value - (norm == Norm::L1 ? cf.value_l1 : cf.value_l2sq)) <= 1e-8);
      CHECK(r.minimizers ==
            canon_set(norm == Norm::L1 ? cf.minimizers_l1 : cf.minimizers_l2));
    }
  }
}

TEST_CASE("cs_max") {
  auto& u = universe();
  const CsMaxResult two = cs_max(2, Norm::L1, u.get(2));
  CHECK(std::abs(two.value - 2) <= 1e-9);
  CHECK(two.argmax.size() == 2);  // both order-2 classes attain it

  const CsMaxResult three = cs_max(3, Norm::L1, u.get(3));
  CHECK(three.value > 0);
  for (const auto& c : three.argmax) {
    const CsResult r = cospectrality(graph6_decode(c.bytes), Norm::L1, u.get(3));
    CHECK(std::abs(r.value - three.value) <= kTieTolerance);
  }
  CHECK_THROWS_AS(cs_max(8, Norm::L1, u.get(8)), std::invalid_argument);
  CHECK_THROWS_AS(cs_max(1, Norm::L1, u.get(2)), std::invalid_argument);
}

TEST_CASE("divisor criterion for positive bipartite cs") {
  CHECK(kmn_positive(4, 4));
  CHECK(kmn_positive(2, 3));
  CHECK_FALSE(kmn_positive(1, 4));  // 1*4 = 2*2 with smaller part sum
  CHECK_FALSE(kmn_positive(1, 6));
  CHECK(kmn_positive(1, 5));
  CHECK_THROWS_AS(kmn_positive(0, 3), std::invalid_argument);
}

TEST_CASE("parallel determinism") {
  auto& u = universe();
  const Graph g = complete_multipartite({2, 3});
  const CsResult a = cospectrality(g, Norm::L1, u.get(5), 1);
  const CsResult b = cospectrality(g, Norm::L1, u.get(5), 2);
  const CsResult c = cospectrality(g, Norm::L1, u.get(5), 8);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.minimizers == b.minimizers);
  CHECK(a.minimizers == c.minimizers);
}

TEST_CASE("error cases") {
  auto& u = universe();
  CHECK_THROWS_AS(cospectrality(Graph(1), Norm::L1, u.get(1)), std::invalid_argument);
  CHECK_THROWS_AS(cospectrality(complete(3), Norm::L1, u.get(4)), std::invalid_argument);
}
