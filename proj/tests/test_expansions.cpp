#include <random>

#include "brt/error.hpp"
#include "brt/expansions.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace brt;
using namespace brt::testing;

namespace {

const char* const kWorkedPolynomial =
    "X^2*Y^2 + 2*X^2*Y + X^2 + 2*X*Y^3*Z + 3*X*Y^2*Z + 3*X*Y^2 + 6*X*Y + 2*X + Y^4*Z^2 + 4*Y^3*Z + 4*Y^2*Z + "
    "2*Y^2 + 4*Y + 1";

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
  std::vector<Cycle> rotation = a.vertices();
  const Label shift = static_cast<Label>(a.half_edge_count());
  for (Cycle c : b.vertices()) {
    for (Label& l : c) l += shift;
    rotation.push_back(c);
  }
  std::vector<HalfEdgePair> pairs;
  for (EdgeIndex e = 0; e < a.edge_count(); ++e) pairs.push_back(a.edge(e));
  for (EdgeIndex e = 0; e < b.edge_count(); ++e) pairs.push_back({b.edge(e)[0] + shift, b.edge(e)[1] + shift});
  return build_ribbon_graph(rotation, pairs);
}

}  // namespace

TEST_CASE("worked example polynomial from every method") {
  const RibbonGraph g = worked_example_graph();
  const MPoly expected = MPoly::parse(kWorkedPolynomial);
  CHECK(expected.term_count() == 14);
  CHECK(expected.coefficient_sum() == 36);
  for (Method m : {Method::StateSum, Method::SpanningTree, Method::QuasiTree, Method::Recursive}) {
    CAPTURE(to_string(m));
    CHECK(compute(g, m).polynomial.to_string() == kWorkedPolynomial);
  }
  CHECK(brt_by_restriction(g) == expected);
}

TEST_CASE("small closed forms") {
  const std::vector<Cycle> s0{{1, 2}};
  const std::vector<HalfEdgePair> s1{{1, 2}};
  CHECK(brt_quasi_tree(build_ribbon_graph(s0, s1)).polynomial.to_string() == "Y + 1");
  CHECK(brt_state_sum(two_interleaved_loops()).polynomial.to_string() == "Y^2*Z + 2*Y + 1");
  CHECK(brt_state_sum(toroidal_embedding()).polynomial.to_string() == "X*Y + X + Y^2*Z + 2*Y + 1");
  CHECK(brt_state_sum(planar_embedding()).polynomial.to_string() == "X*Y + X + Y^2 + 2*Y + 1");
  const std::vector<Cycle> b0{{1}, {2}};
  const std::vector<HalfEdgePair> b1{{1, 2}};
  CHECK(brt_recursive(build_ribbon_graph(b0, b1)).polynomial == MPoly::X());
}

TEST_CASE("term counts") {
  const VerifyReport r = verify_all(worked_example_graph());
  CHECK(r.ok());
  CHECK(r.results[0].term_count == 64);
  CHECK(r.results[2].term_count == 12);
  CHECK(verify_all(two_interleaved_loops()).results[2].term_count == 2);
}

TEST_CASE("spanning-tree inner weights of the worked example") {
  const RibbonGraph g = worked_example_graph();
  const auto trees = spanning_trees_with_activities(underlying_graph(g));
  REQUIRE(trees.size() == 4);
  CHECK(spanning_tree_inner_weight(g, trees[0]) == MPoly::parse("1 + 4*Y + 2*Y^2 + 4*Y^2*Z + 4*Y^3*Z + Y^4*Z^2"));
  CHECK(spanning_tree_inner_weight(g, trees[1]) == MPoly::parse("1 + 3*Y + Y^2 + 2*Y^2*Z + Y^3*Z"));
  CHECK(spanning_tree_inner_weight(g, trees[2]) == (MPoly(1) + MPoly::Y()) * MPoly::parse("1 + 2*Y + Y^2*Z"));
  CHECK(spanning_tree_inner_weight(g, trees[3]) == (MPoly(1) + MPoly::Y()).pow(2));
}

TEST_CASE("four methods agree on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const RibbonGraph g = random_connected_graph(rng, 1 + rng() % 5, rng() % 5);
    const VerifyReport r = verify_all(g);
    CHECK(r.all_equal);
    CHECK(r.specialization_holds);
    CHECK(r.quasi_tree_not_more_terms);
    CHECK(r.results[0].polynomial == brt_by_restriction(g));
  }
}

TEST_CASE("total is independent of the edge order") {
  std::mt19937_64 rng(37);
  std::vector<RibbonGraph> graphs{worked_example_graph()};
  for (int i = 0; i < 10; ++i) graphs.push_back(random_connected_graph(rng, 2 + rng() % 3, 1 + rng() % 4));
  for (const auto& g : graphs) {
    const MPoly base = brt_state_sum(g).polynomial;
    for (int k = 0; k < 5; ++k) {
      const RibbonGraph h = g.with_edge_order(random_order(rng, g.edge_count()));
      CHECK(brt_quasi_tree(h).polynomial == base);
      CHECK(brt_spanning_tree_expansion(h).polynomial == base);
      CHECK(brt_recursive(h).polynomial == base);
    }
  }
}

TEST_CASE("multiplicative over disjoint unions") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 15; ++i) {
    const RibbonGraph a = random_connected_graph(rng, 1 + rng() % 3, rng() % 3);
    const RibbonGraph b = random_connected_graph(rng, 1 + rng() % 3, rng() % 3);
    const RibbonGraph u = disjoint_union(a, b);
    CHECK(u.component_count() == 2);
    const MPoly product = brt_recursive(a).polynomial * brt_recursive(b).polynomial;
    CHECK(brt_recursive(u).polynomial == product);
    CHECK(brt_state_sum(u).polynomial == product);
  }
}

TEST_CASE("counting substitution counts quasi-trees") {
  const MPoly q = counting_substitution(brt_state_sum(worked_example_graph()).polynomial);
  CHECK(ascending_t_string(at_y_zero(q)) == "4 + 7*t + t^2");
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    const RibbonGraph g = random_connected_graph(rng, 1 + rng() % 4, rng() % 4);
    const MPoly q0 = at_y_zero(counting_substitution(brt_state_sum(g).polynomial));
    CHECK(q0.coefficient_sum() == enumerate_quasi_trees(g).size());
  }
}

TEST_CASE("method errors") {
  std::mt19937_64 rng(47);
  const RibbonGraph big = random_connected_graph(rng, 3, 8);
  CHECK_THROWS_WITH_AS(brt_state_sum(big, 9), doctest::Contains("SizeLimit"), Error);
  CHECK_NOTHROW(brt_state_sum(big, 10));
  const std::vector<Cycle> s0{{1, 2}, {3, 4}};
  const std::vector<HalfEdgePair> s1{{1, 2}, {3, 4}};
  const RibbonGraph two = build_ribbon_graph(s0, s1);
  CHECK_THROWS_WITH_AS(brt_quasi_tree(two), doctest::Contains("Disconnected"), Error);
  CHECK_THROWS_WITH_AS(brt_spanning_tree_expansion(two), doctest::Contains("Disconnected"), Error);
  CHECK(brt_recursive(two).polynomial == MPoly::parse("Y^2 + 2*Y + 1"));
}

TEST_CASE("duality") {
  const DualityReport six = duality_check(worked_example_graph());
  CHECK(six.genus == 2);
  CHECK(six.histogram == std::vector<std::size_t>{4, 7, 1});
  CHECK(six.dual_histogram == std::vector<std::size_t>{1, 7, 4});
  CHECK(six.bijection_holds);
  CHECK(six.points.size() == 20);
  CHECK(six.shifted_identity_holds);

  const DualityReport right = duality_check(toroidal_embedding());
  CHECK(right.histogram == std::vector<std::size_t>{2, 1});
  CHECK(right.dual_histogram == std::vector<std::size_t>{1, 2});
  CHECK(right.bijection_holds);
  CHECK(right.shifted_identity_holds);

  for (const auto& p : six.points) {
    CHECK((p.x - 1) * p.y * p.z == 1);
  }
  const DualityReport again = duality_check(worked_example_graph());
  CHECK(again.points.front().x == six.points.front().x);
}

TEST_CASE("duality on a single bridge") {
  const std::vector<Cycle> s0{{1}, {2}};
  const std::vector<HalfEdgePair> s1{{1, 2}};
  const DualityReport r = duality_check(build_ribbon_graph(s0, s1));
  CHECK(r.bijection_holds);
  CHECK(r.shifted_identity_holds);
  // With g = 0 the swapped form reads C(X, Y, Z) = C*(Y, X, Z), i.e. X = 1 + X.
  CHECK_FALSE(r.swapped_identity_holds);
}

TEST_CASE("worked example evaluated at one") {
  CHECK(evaluate(brt_state_sum(worked_example_graph()).polynomial, {1, 1, 1, 0}) == 36);
}
