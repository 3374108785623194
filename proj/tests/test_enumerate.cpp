#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>

#include "specgraph/enumerate.hpp"

using namespace specgraph;

namespace {

// independent oracle: canonicalize all 2^(n(n-1)/2) labeled graphs
std::set<std::string> labeled_dedup(int n) {
  std::set<std::string> classes;
  const int bits = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (1ull << bits); ++code) {
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++b)
        if (code >> b & 1) edges.emplace_back(u, v);
    classes.insert(canonical_form(Graph::from_edges(n, edges)).bytes);
  }
  return classes;
}

}  // namespace

TEST_CASE("class counts match the labeled-graph oracle") {
  for (int n = 1; n <= 6; ++n) {
    const GraphSet set = enumerate_graphs(n);
    const auto oracle = labeled_dedup(n);
    REQUIRE(set.size() == oracle.size());
    for (const auto& c : set.canon) CHECK(oracle.count(c.bytes) == 1);
  }
}

TEST_CASE("known class counts") {
  const std::size_t expect[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expect[n - 1]);
}

TEST_CASE("representatives are canonical, sorted and pairwise non-isomorphic") {
  for (int n = 1; n <= 7; ++n) {
    const GraphSet set = enumerate_graphs(n);
    std::set<std::string> seen;
    std::string prev;
    for (std::size_t i = 0; i < set.size(); ++i) {
      CHECK(set.canon[i].bytes == graph6_encode(set.graphs[i]));
      CHECK(canonical_form(set.graphs[i]) == set.canon[i]);
      if (i) CHECK(prev < set.canon[i].bytes);
      prev = set.canon[i].bytes;
      CHECK(seen.insert(set.canon[i].bytes).second);
    }
  }
}

TEST_CASE("edge filters partition the unfiltered set") {
  for (int n = 3; n <= 6; ++n) {
    const std::size_t all = enumerate_graphs(n).size();
    std::size_t total = 0;
    for (int m = 0; m <= n * (n - 1) / 2; ++m)
      total += enumerate_graphs(n, EdgeFilter{m, m}).size();
    CHECK(total == all);
  }
}

TEST_CASE("graphs with exactly two edges") {
  // only 2K2 + (n-4)K1 and P3 + (n-3)K1
  for (int n = 4; n <= 7; ++n) {
    const GraphSet set = enumerate_graphs(n, EdgeFilter{2, 2});
    REQUIRE(set.size() == 2);
    std::set<CanonicalForm> got(set.canon.begin(), set.canon.end());
    std::set<CanonicalForm> want{
        canonical_form(add_isolated(union_copies(2, complete(2)), n - 4)),
        canonical_form(add_isolated(path(3), n - 3))};
    CHECK(got == want);
  }
}

TEST_CASE("deterministic for any worker count") {
  const GraphSet a = enumerate_graphs(6, std::nullopt, 1);
  const GraphSet b = enumerate_graphs(6, std::nullopt, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.canon[i] == b.canon[i]);
}

TEST_CASE("graph6 file round trip") {
  const GraphSet set = enumerate_graphs(5);
  REQUIRE(set.size() == 34);
  const std::string path = "enumerate_roundtrip.g6";
  CHECK(write_graph6_stream(set, path) == 34);
  const GraphSet back = read_graph6_stream(path);
  REQUIRE(back.size() == 34);
  CHECK(back.order == 5);
  for (std::size_t i = 0; i < 34; ++i) CHECK(back.canon[i] == set.canon[i]);
  std::remove(path.c_str());
}

TEST_CASE("stream errors name the offending line") {
  const std::string path = "enumerate_bad.g6";
  {
    std::ofstream out(path);
    out << "Bw\nC~\n";  // order 3 then order 4
  }
  try {
    read_graph6_stream(path);
    FAIL("mixed orders accepted");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  {
    std::ofstream out(path);
    out << "Bw\nB\n";  // truncated second line
  }
  try {
    read_graph6_stream(path);
    FAIL("malformed line accepted");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph6_stream("no_such_file.g6"), std::runtime_error);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(11), std::invalid_argument);
}
