#include <random>

#include "brt/error.hpp"
#include "brt/ribbon_graph.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace brt;
using namespace brt::testing;

namespace {

std::vector<RibbonGraph> sample_graphs() {
  std::vector<RibbonGraph> out{worked_example_graph(), planar_embedding(), toroidal_embedding(), two_interleaved_loops()};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    out.push_back(random_connected_graph(rng, 1 + rng() % 4, rng() % 5));
  }
  return out;
}

}  // namespace

TEST_CASE("perm composition applies the right factor first") {
  const std::vector<Cycle> a{{1, 2}};
  const std::vector<Cycle> b{{2, 3}};
  const Perm p = Perm::from_cycles(a, 3) * Perm::from_cycles(b, 3);
  CHECK(p(2) == 3);  // b: 2 -> 3, a fixes 3
  CHECK(p(3) == 1);  // b: 3 -> 2, a: 2 -> 1
  CHECK(p.inverse() * p == Perm::identity(3));
  CHECK_THROWS_AS(Perm({1, 1, 2}), Error);
}

TEST_CASE("build validates sigma1 and sigma0") {
  const std::vector<Cycle> s0{{1, 2, 3, 4}};
  SUBCASE("repeated pair label") {
    const std::vector<HalfEdgePair> s1{{1, 2}, {2, 3}};
    CHECK_THROWS_WITH_AS(build_ribbon_graph(s0, s1), doctest::Contains("NotInvolution"), Error);
  }
  SUBCASE("fixed point") {
    const std::vector<HalfEdgePair> s1{{1, 1}, {3, 4}};
    CHECK_THROWS_WITH_AS(build_ribbon_graph(s0, s1), doctest::Contains("NotInvolution"), Error);
  }
  SUBCASE("overlapping cycles") {
    const std::vector<Cycle> bad{{1, 2}, {2, 3}};
    const std::vector<HalfEdgePair> s1{{1, 2}, {3, 4}};
    CHECK_THROWS_WITH_AS(build_ribbon_graph(bad, s1), doctest::Contains("NotPartition"), Error);
  }
  SUBCASE("missing label") {
    const std::vector<Cycle> bad{{1, 2, 5}};
    const std::vector<HalfEdgePair> s1{{1, 2}, {3, 5}};
    CHECK_THROWS_AS(build_ribbon_graph(bad, s1), Error);
  }
}

TEST_CASE("planar and toroidal embedding permutations") {
  const RibbonGraph left = planar_embedding();
  CHECK(left.faces() == std::vector<Cycle>{{1}, {2, 4, 6}, {3, 5}});
  CHECK(graph_counts(left) == GraphCounts{2, 3, 3, 1, 0, 2});

  const RibbonGraph right = toroidal_embedding();
  CHECK(right.faces() == std::vector<Cycle>{{1, 5, 2, 3, 6, 4}});
  CHECK(graph_counts(right) == GraphCounts{2, 3, 1, 1, 1, 2});
}

TEST_CASE("worked example permutations") {
  const RibbonGraph g = worked_example_graph();
  CHECK(g.faces() == std::vector<Cycle>{{1, 6, 7, 10, 12, 3, 2, 4, 9, 8, 11, 5}});
  CHECK(graph_counts(g) == GraphCounts{3, 6, 1, 1, 2, 4});
  // sigma0(sigma1(sigma2(1))) = sigma0(sigma1(6)) = sigma0(5) = 1
  CHECK(g.sigma2()(1) == 6);
  CHECK(g.sigma1()(6) == 5);
  CHECK(g.sigma0()(5) == 1);
}

TEST_CASE("single planar loop counts") {
  const std::vector<Cycle> s0{{1, 2}};
  const std::vector<HalfEdgePair> s1{{1, 2}};
  CHECK(graph_counts(build_ribbon_graph(s0, s1)) == GraphCounts{1, 1, 2, 1, 0, 1});
}

TEST_CASE("sigma0 sigma1 sigma2 is the identity") {
  for (const auto& g : sample_graphs()) {
    for (Label i = 1; i <= static_cast<Label>(g.half_edge_count()); ++i) {
      CHECK(g.sigma0()(g.sigma1()(g.sigma2()(i))) == i);
    }
  }
}

TEST_CASE("boundary components") {
  const RibbonGraph g = worked_example_graph();
  CHECK(boundary_components(g, g.all_edges()) == std::vector<Cycle>{{1, 5, 11, 8, 9, 4, 2, 3, 12, 10, 7, 6}});
  const EdgeSet h = EdgeSet::of({1, 2, 3, 5});  // 011101
  CHECK(boundary_components(g, h) == std::vector<Cycle>{{1, 3, 12, 10, 4, 2, 5, 11, 8, 9, 7, 6}});
  CHECK(boundary_components(g, EdgeSet{}) == g.vertices());
}

TEST_CASE("boundary walk and restriction agree on every subgraph") {
  for (const auto& g : sample_graphs()) {
    g.all_edges().for_each_subset([&](EdgeSet h) {
      const SpanningSubgraph s = analyze_subgraph(g, h);
      CHECK(s.f == oracle_face_count(g, h));
      CHECK(s.k == oracle_component_count(g, h));
      CHECK(s.g == oracle_genus(g, h));
      CHECK(s.f >= s.k);
      CHECK(2 * s.k + s.e >= g.vertex_count() + s.f);
      CHECK((2 * s.k + s.e - g.vertex_count() - s.f) % 2 == 0);
      CHECK(s.n == s.k + s.e - g.vertex_count());
    });
  }
}

TEST_CASE("restrict subgraph") {
  const RibbonGraph g = worked_example_graph();
  const auto empty = restrict_subgraph(g, EdgeSet{});
  CHECK(empty.isolated_vertices == 3);
  CHECK(empty.face_count() == 3);
  CHECK(restrict_subgraph(g, EdgeSet::of({2, 4})).face_count() == 1);  // 001010

  const auto one_loop = restrict_subgraph(two_interleaved_loops(), EdgeSet::of({0}));
  CHECK(one_loop.isolated_vertices == 0);
  CHECK(one_loop.bands.vertex_count() == 1);
  CHECK(one_loop.bands.edge_count() == 1);
  CHECK(one_loop.face_count() == 2);
  CHECK(one_loop.bands.genus() == 0);
}

TEST_CASE("delete edge") {
  const RibbonGraph right = toroidal_embedding();
  const RibbonGraph d = delete_edge(right, 1);  // {2,6}
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 2);
  CHECK(d.face_count() == 2);
  CHECK(d.source_labels() == std::vector<Label>{1, 3, 4, 5});

  const std::vector<Cycle> s0{{1, 2}};
  const std::vector<HalfEdgePair> s1{{1, 2}};
  CHECK(delete_edge(build_ribbon_graph(s0, s1), 0).is_trivial());

  const RibbonGraph six = delete_edge(worked_example_graph(), 5);
  CHECK(graph_counts(six) == GraphCounts{3, 5, 2, 1, 1, 3});

  const std::vector<Cycle> path0{{1}, {2, 3}, {4}};
  const std::vector<HalfEdgePair> path1{{1, 2}, {3, 4}};
  CHECK_THROWS_WITH_AS(delete_edge(build_ribbon_graph(path0, path1), 0), doctest::Contains("IsolatedVertex"), Error);
}

TEST_CASE("contract edge") {
  const std::vector<Cycle> s0{{1}, {2}};
  const std::vector<HalfEdgePair> s1{{1, 2}};
  CHECK(contract_edge(build_ribbon_graph(s0, s1), 0).is_trivial());

  const RibbonGraph right = toroidal_embedding();
  CHECK_THROWS_WITH_AS(contract_edge(right, 0), doctest::Contains("LoopContraction"), Error);  // {1,3}
  const RibbonGraph c = contract_edge(right, 1);  // {2,6}
  CHECK(c.vertex_count() == 1);
  CHECK(c.edge_count() == 2);
  CHECK(c.genus() == 1);

  const RibbonGraph six = contract_edge(worked_example_graph(), 3);  // {7,8}
  CHECK(six.vertex_count() == 2);
  CHECK(six.edge_count() == 5);
  CHECK(six.genus() == 2);
}

TEST_CASE("deletion and contraction properties") {
  for (const auto& g : sample_graphs()) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (!g.is_loop(e)) {
        const RibbonGraph c = contract_edge(g, e);
        CHECK(c.vertex_count() == g.vertex_count() - 1);
        CHECK(c.edge_count() == g.edge_count() - 1);
        CHECK(c.genus() == g.genus());
        CHECK(c.component_count() == g.component_count());
      }
      if (g.is_loop(e) || !is_bridge(g, e)) {
        if (g.edge_count() == 1) continue;
        const RibbonGraph d = delete_edge(g, e);
        CHECK(d.component_count() <= g.component_count() + 1);
        CHECK(d.edge_count() == g.edge_count() - 1);
      }
    }
  }
}

TEST_CASE("edge order survives deletion") {
  const RibbonGraph g = worked_example_graph().with_edge_order({5, 4, 3, 2, 1, 0});
  const RibbonGraph d = delete_edge(g, 2);
  CHECK(d.edge_order() == std::vector<EdgeIndex>{4, 3, 2, 1, 0});
}

TEST_CASE("dual graph") {
  const RibbonGraph d = dual_graph(toroidal_embedding());
  CHECK(graph_counts(d) == GraphCounts{1, 3, 2, 1, 1, 3});
  CHECK(graph_counts(dual_graph(worked_example_graph())) == GraphCounts{1, 6, 3, 1, 2, 6});
  for (const auto& g : sample_graphs()) {
    const RibbonGraph dg = dual_graph(g);
    CHECK(dg.vertex_count() == g.face_count());
    CHECK(dg.face_count() == g.vertex_count());
    CHECK(dg.genus() == g.genus());
    CHECK(dg.edge_count() == g.edge_count());
    CHECK(graph_counts(dual_graph(dg)) == graph_counts(g));
  }
  const std::vector<Cycle> s0{{1}, {2}, {3, 4}};
  const std::vector<HalfEdgePair> s1{{1, 2}, {3, 4}};
  CHECK_THROWS_WITH_AS(dual_graph(build_ribbon_graph(s0, s1)), doctest::Contains("Disconnected"), Error);
}

TEST_CASE("disconnected graphs split into components") {
  const std::vector<Cycle> s0{{1, 3}, {2, 4}, {5, 6}};
  const std::vector<HalfEdgePair> s1{{1, 2}, {3, 4}, {5, 6}};
  const RibbonGraph g = build_ribbon_graph(s0, s1);
  CHECK_FALSE(g.connected());
  CHECK(g.component_count() == 2);
  const auto parts = connected_components(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].edge_count() == 2);
  CHECK(parts[1].edge_count() == 1);
  CHECK(parts[1].source_labels() == std::vector<Label>{5, 6});
}
