#include <catch2/catch_amalgamated.hpp>

#include "specgraph/table.hpp"
#include "specgraph/verify.hpp"

using namespace specgraph;

namespace {

GraphUniverse& universe() {
  static GraphUniverse u(2);
  return u;
}

}  // namespace

TEST_CASE("every known check passes at order six") {
  auto& u = universe();
  for (const std::string& id : known_theorems()) {
    const VerificationReport rep = verify(id, 6, u);
    INFO(id << ": " << rep.details << " " << rep.witness);
    CHECK(rep.confirmed);
    CHECK(rep.theorem == id);
    CHECK(rep.witness.empty());
  }
}

TEST_CASE("denser checks at order seven") {
  auto& u = universe();
  for (const std::string id : {"thm_1_3", "thm_4_2", "thm_4_5", "lemma_3_3"}) {
    const VerificationReport rep = verify(id, 7, u);
    INFO(id << ": " << rep.details << " " << rep.witness);
    CHECK(rep.confirmed);
  }
}

TEST_CASE("invalid requests") {
  auto& u = universe();
  CHECK_THROWS_AS(verify("thm_9_9", 5, u), std::invalid_argument);
  CHECK_THROWS_AS(verify("thm_1_1", 1, u), std::invalid_argument);
  CHECK_THROWS_AS(verify("thm_1_1", 11, u), std::invalid_argument);
}

TEST_CASE("comparison table at order six") {
  auto& u = universe();
  const auto rows = paper_table(6, u);
  // families with an instance of order <= 6: nK1 (5), K2+(n-2)K1 (5), K_n (5),
  // K_{n,n} (2), K_{n,n+1} (1) -> 18 instances, two norms each
  CHECK(rows.size() == 36);
  for (const auto& r : rows) {
    INFO(r.graph << " " << r.norm);
    CHECK(std::abs(r.cs_bruteforce - r.cs_closed_form) <= 1e-8);
    CHECK_FALSE(r.minimizers.empty());
  }
  const std::string csv = table_csv(rows);
  CHECK(csv.rfind("graph,norm,cs_bruteforce,cs_closed_form,minimizers\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 37);
  CHECK(csv.find("\"K3,3\",l1,") != std::string::npos);
  CHECK_THROWS_AS(paper_table(10, u, false), std::invalid_argument);
  CHECK_THROWS_AS(paper_table(1, u), std::invalid_argument);
}
