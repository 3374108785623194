#include <catch2/catch_amalgamated.hpp>

#include "specgraph/family_expr.hpp"

using namespace specgraph;

TEST_CASE("atoms evaluate to the expected graphs") {
  CHECK(is_isomorphic(parse_family_graph("K5"), complete(5)));
  CHECK(is_isomorphic(parse_family_graph("K3,4"), complete_multipartite({3, 4})));
  CHECK(is_isomorphic(parse_family_graph("K1,1,2"), complete_multipartite({1, 1, 2})));
  CHECK(is_isomorphic(parse_family_graph("P4"), path(4)));
  CHECK(is_isomorphic(parse_family_graph("C5"), cycle(5)));
  CHECK(parse_family_graph("E6") == Graph(6));
  CHECK(is_isomorphic(parse_family_graph("K5-e"), delete_edge(complete(5), 0, 1)));
}

TEST_CASE("operators: union, join, copies, parentheses") {
  CHECK(is_isomorphic(parse_family_graph("K2+3*K1"), add_isolated(complete(2), 3)));
  CHECK(is_isomorphic(parse_family_graph("(K1+K2)vE3"),
                      join(disjoint_union(Graph(1), complete(2)), Graph(3))));
  CHECK(is_isomorphic(parse_family_graph("2*K1,2"),
                      union_copies(2, complete_multipartite({1, 2}))));
  // join binds tighter than union
  CHECK(is_isomorphic(parse_family_graph("K1+K2vK1"),
                      disjoint_union(Graph(1), join(complete(2), Graph(1)))));
  CHECK(is_isomorphic(parse_family_graph(" K2 + 2*K1 "), add_isolated(complete(2), 2)));
}

TEST_CASE("parse errors carry the byte offset") {
  auto offset_of = [](const std::string& text) {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return e.offset;
    }
    FAIL("expected a parse error for: " << text);
    return std::size_t(0);
  };
  CHECK(offset_of("Q3") == 0);         // unknown atom letter
  CHECK(offset_of("K") == 1);          // missing size
  CHECK(offset_of("K0") == 1);         // zero size
  CHECK(offset_of("K3,0") == 3);       // zero part
  CHECK(offset_of("K2+") == 3);        // dangling operator
  CHECK(offset_of("(K2+K1") == 6);     // unbalanced paren
  CHECK(offset_of("K2 K3") == 3);      // trailing input
  CHECK(offset_of("3K2") == 1);        // missing '*'
  CHECK(offset_of("P3-e") == 2);       // -e needs a one-part complete atom
  CHECK(offset_of("K2,3-e") == 4);
}

TEST_CASE("to_string round trips through the parser") {
  for (const std::string text :
       {"K5", "K3,4", "K5-e", "P4", "C6", "E3", "K2+3*K1", "(K1+K2)vE3",
        "2*K1,2+K3vK2", "(K2+K2)v(K1+K1)"}) {
    const auto e = parse_family(text);
    const std::string printed = to_string(*e);
    CHECK(is_isomorphic(parse_family_graph(printed), evaluate(*e)));
  }
  CHECK(to_string(*parse_family(" K2 + 3*K1 ")) == "K2+3*K1");
}

TEST_CASE("describe_graph labels known families") {
  CHECK(describe_graph(complete(5)) == "K5");
  CHECK(describe_graph(path(4)) == "P4");
  CHECK(describe_graph(cycle(5)) == "C5");
  CHECK(describe_graph(Graph(1)) == "K1");
  CHECK(describe_graph(complete_multipartite({2, 3})) == "K2,3");
  CHECK(describe_graph(delete_edge(complete(4), 0, 1)) == "K4-e");
  CHECK(describe_graph(add_isolated(complete(2), 2)) == "K2+2*K1");
  CHECK(describe_graph(Graph(3)) == "3*K1");
  CHECK(describe_graph(disjoint_union(path(3), complete(3))) == "K3+P3");
  // aliases resolve to the path/cycle spelling
  CHECK(describe_graph(complete_multipartite({1, 2})) == "P3");
  CHECK(describe_graph(complete_multipartite({2, 2})) == "C4");
  // unrecognized graphs yield an empty label
  const Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(describe_graph(paw).empty());
}

TEST_CASE("described labels parse back to the same class") {
  for (const Graph& g :
       {complete(6), path(5), cycle(6), complete_multipartite({2, 2, 3}),
        delete_edge(complete(5), 0, 1), add_isolated(complete_multipartite({1, 3}), 2)}) {
    const std::string label = describe_graph(g);
    REQUIRE_FALSE(label.empty());
    CHECK(is_isomorphic(parse_family_graph(label), g));
  }
}
