#include "doctest.h"
#include "plucker/io.hpp"
#include "plucker/relations.hpp"

using namespace plucker;

TEST_CASE("graph text and JSON") {
  auto g = parse_graph("n=4; edges=1-3,2-4");
  CHECK(g == DirectedGraph{4, {{1, 3}, {2, 4}}});
  CHECK(parse_graph(to_text(g)) == g);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(parse_graph(R"({"n":4,"edges":[[4,1],[2,3]]})") == DirectedGraph{4, {{4, 1}, {2, 3}}});
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(parse_graph("n=4; edges=1-5"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=x; edges=1-2"), ParseError);
  CHECK_THROWS_AS(parse_graph("edges=1-2"), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"n\":4,"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=4; edges=1-2-3"), ParseError);
}

TEST_CASE("ring elements") {
  RingElement e = x_of({4, {{1, 2}, {3, 4}}}) + Q(3, 2) * x_of({4, {{1, 4}, {2, 3}}});
  CHECK(parse_ring_element(ring_to_json(e).dump()) == e);
  CHECK(ring_to_text(e) == "X[12 34] + 3/2 X[14 23]");
  CHECK(ring_to_text(RingElement(4)) == "0");
  CHECK(ring_to_text(x_of({2, {{2, 1}}})) == "-X[12]");
  CHECK(parse_ring_element("n=2; edges=2-1") == x_of({2, {{2, 1}}}));
}

TEST_CASE("sym elements") {
  auto s = segre_cubic();
  CHECK(sym_from_json(sym_to_json(s)) == s);
  json bad = sym_to_json(s);
  bad["k"] = 2;
  CHECK_THROWS_AS(sym_from_json(bad), ParseError);
}

TEST_CASE("trees") {
  auto w = parse_tree("tree { vertices=4; edges=0-3,1-3,2-3; leaves=0:1,1:2,2:3; weights=0-3:1,1-3:1,2-3:0 }");
  CHECK(w.tree.num_leaves() == 3);
  CHECK(is_admissible(w));
  auto again = parse_tree(tree_to_text(w));
  CHECK(again == w);
  CHECK(tree_to_text(again) == tree_to_text(w));
  CHECK_THROWS_AS(parse_tree("tree { vertices=4; edges=0-3,1-3; leaves=0:1,1:2 }"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree { vertices=4; edges=0-3,1-3,2-3; leaves=0:1,1:2,2:3; weights=0-1:1 }"), ParseError);
  CHECK_THROWS_AS(parse_tree("graph { }"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree { vertices=4; colour=red; edges=0-3,1-3,2-3; leaves=0:1,1:2,2:3 }"), ParseError);
}

TEST_CASE("relation data") {
  auto g = genseg6_datum();
  auto g2 = gen_segre_from_json(gen_segre_to_json(g));
  CHECK(generalized_segre(g2) == generalized_segre(g));
  BinomialQuadDatum b{8, make_matching(8, {{1, 2}, {5, 6}, {3, 4}, {7, 8}}), make_matching(8, {{2, 6}, {1, 5}, {4, 8}, {3, 7}}), {1, 2, 5, 6}};
  auto b2 = binomial_from_json(binomial_to_json(b));
  CHECK(b2.red == b.red);
  CHECK(b2.green == b.green);
  CHECK(b2.U == b.U);
  CHECK_THROWS(binomial_from_json(json::parse(R"({"n":8})")));
}

TEST_CASE("decomposition JSON") {
  json j = decomposition_to_json({{{3, 3}, 1}, {{6}, 2}});
  CHECK(j.dump() == R"([{"partition":[6],"multiplicity":2},{"partition":[3,3],"multiplicity":1}])");
}
