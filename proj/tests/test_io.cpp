#include "brt/error.hpp"
#include "brt/io.hpp"
#include "brt/quasi_tree.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace brt;
using namespace brt::testing;

TEST_CASE("json and text graph documents agree") {
  const GraphDocument json_doc = parse_graph_document(
      R"({"sigma0": [[1,2,3,4],[5,6]], "sigma1": [[1,3],[2,6],[4,5]], "edge_order": [2,1,3]})");
  const GraphDocument text_doc = parse_graph_document(
      "# toroidal embedding\nsigma0: (1,2,3,4)(5,6)\nsigma1: (1,3)(2,6)(4,5)\nedge_order: 2,1,3\n");
  CHECK(json_doc.sigma0 == text_doc.sigma0);
  CHECK(json_doc.sigma1 == text_doc.sigma1);
  CHECK(json_doc.edge_order == text_doc.edge_order);
  const RibbonGraph g = to_ribbon_graph(text_doc);
  CHECK(g.edge_order() == std::vector<EdgeIndex>{1, 0, 2});
  CHECK(graph_counts(g) == graph_counts(toroidal_embedding()));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_graph_document("{\"sigma0\": [[1,2]]"), doctest::Contains("Parse"), Error);
  CHECK_THROWS_WITH_AS(parse_graph_document("sigma0: (1,2\nsigma1: (1,2)"), doctest::Contains("Parse"), Error);
  CHECK_THROWS_AS(parse_graph_document("sigma1: (1,2)"), Error);
  CHECK_THROWS_AS(to_ribbon_graph(parse_graph_document("sigma0: (1,2,3)\nsigma1: (1,2)(3,3)")), Error);
  CHECK_THROWS_AS(apply_edge_order(toroidal_embedding(), {1, 1, 2}), Error);
  CHECK_THROWS_AS(apply_edge_order(toroidal_embedding(), {1, 2}), Error);
  CHECK_THROWS_AS(apply_edge_order(toroidal_embedding(), {0, 1, 2}), Error);
}

TEST_CASE("graph json") {
  const auto j = graph_to_json(toroidal_embedding());
  CHECK(j["counts"]["v"] == 2);
  CHECK(j["counts"]["f"] == 1);
  CHECK(j["counts"]["g"] == 1);
  CHECK(j["edge_order"].dump() == "[1,2,3]");
  CHECK(j["sigma2"].dump() == "[[1,5,2,3,6,4]]");
}

TEST_CASE("polynomial json round trip") {
  const MPoly p = MPoly::parse("X^2*Y - 3*Y*Z + 1") + MPoly::monomial({0, 0, 0, 2}, BigInt(1) << 80);
  const auto j = poly_to_json(p);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["coeff"] == 1);
  CHECK(j[1]["coeff"] == -3);
  CHECK(j[2]["coeff"] == "1208925819614629174706176");
  CHECK(j[2]["t"] == 2);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_to_json(MPoly()).empty());
}

TEST_CASE("cycle strings") {
  CHECK(cycles_string({{1, 2, 3}, {4}}) == "(1,2,3)(4)");
}
