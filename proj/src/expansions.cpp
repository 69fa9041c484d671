#include "brt/expansions.hpp"

#include <chrono>
#include <random>
#include <set>
#include <utility>

#include "brt/error.hpp"
#include "brt/multigraph.hpp"

namespace brt {

namespace {

template <typename Fn>
BrtResult timed(Method method, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  BrtResult result;
  result.method = method;
  fn(result);
  result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

MPoly y_z_monomial(std::size_t n, std::size_t g) {
  return MPoly::monomial({0, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(g), 0});
}

MPoly recursive_connected(const RibbonGraph& graph, std::size_t& terms) {
  const auto& order = graph.edge_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const EdgeIndex e = *it;
    if (graph.is_loop(e)) continue;
    if (is_bridge(graph, e)) return MPoly::X() * recursive_connected(contract_edge(graph, e), terms);
    return recursive_connected(delete_edge(graph, e), terms) + recursive_connected(contract_edge(graph, e), terms);
  }
  // One vertex: every edge is a loop.
  MPoly sum;
  graph.all_edges().for_each_subset([&](EdgeSet h) {
    const SpanningSubgraph s = analyze_subgraph(graph, h);
    sum += y_z_monomial(s.n, s.g);
    ++terms;
  });
  return sum;
}

Rational rational_pow(const Rational& base, std::size_t exp) {
  Rational out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::StateSum: return "statesum";
    case Method::SpanningTree: return "tree";
    case Method::QuasiTree: return "quasitree";
    case Method::Recursive: return "recursive";
  }
  return "unknown";
}

BrtResult brt_state_sum(const RibbonGraph& graph, std::size_t cap) {
  if (graph.edge_count() > cap) {
    throw Error(ErrorCode::SizeLimit, std::to_string(graph.edge_count()) + " edges exceed the state-sum cap of " +
                                          std::to_string(cap));
  }
  return timed(Method::StateSum, [&](BrtResult& r) {
    r.polynomial = state_sum_over(graph, PartialResolution(graph.edge_count()));
    r.term_count = std::size_t{1} << graph.edge_count();
  });
}

MPoly state_sum_over(const RibbonGraph& graph, const PartialResolution& rho) {
  const std::size_t k = graph.component_count();
  const MPoly x_minus_one = MPoly::X() - MPoly(1);
  std::vector<MPoly> x_powers{MPoly(1)};
  MPoly sum;
  rho.unresolved().for_each_subset([&](EdgeSet free) {
    const SpanningSubgraph h = analyze_subgraph(graph, rho.ones() | free);
    const std::size_t shift = h.k - k;
    while (x_powers.size() <= shift) x_powers.push_back(x_powers.back() * x_minus_one);
    sum += x_powers[shift] * y_z_monomial(h.n, h.g);
  });
  return sum;
}

MPoly spanning_tree_inner_weight(const RibbonGraph& graph, const SpanningTree& tree) {
  MPoly sum;
  tree.externally_active.for_each_subset([&](EdgeSet s) {
    const SpanningSubgraph h = analyze_subgraph(graph, tree.edges | s);
    sum += y_z_monomial(h.n, h.g);
  });
  return sum;
}

BrtResult brt_spanning_tree_expansion(const RibbonGraph& graph) {
  if (!graph.connected()) throw Error(ErrorCode::Disconnected, "spanning-tree expansion needs a connected graph");
  return timed(Method::SpanningTree, [&](BrtResult& r) {
    for (const auto& tree : spanning_trees_with_activities(underlying_graph(graph))) {
      r.polynomial += MPoly::monomial({static_cast<std::uint32_t>(tree.internally_active), 0, 0, 0}) *
                      spanning_tree_inner_weight(graph, tree);
      r.term_count += std::size_t{1} << tree.externally_active.size();
    }
  });
}

BrtResult brt_recursive(const RibbonGraph& graph) {
  return timed(Method::Recursive, [&](BrtResult& r) {
    r.polynomial = MPoly(1);
    for (const auto& component : connected_components(graph)) {
      r.polynomial *= recursive_connected(component, r.term_count);
    }
  });
}

BrtResult brt_quasi_tree(const RibbonGraph& graph) {
  if (!graph.connected()) throw Error(ErrorCode::Disconnected, "quasi-tree expansion needs a connected graph");
  return timed(Method::QuasiTree, [&](BrtResult& r) {
    for (const auto& qt : enumerate_quasi_trees(graph)) {
      r.polynomial += quasi_tree_weight(qt);
      ++r.term_count;
    }
  });
}

BrtResult compute(const RibbonGraph& graph, Method method, std::size_t cap) {
  switch (method) {
    case Method::StateSum: return brt_state_sum(graph, cap);
    case Method::SpanningTree: return brt_spanning_tree_expansion(graph);
    case Method::QuasiTree: return brt_quasi_tree(graph);
    case Method::Recursive: return brt_recursive(graph);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

VerifyReport verify_all(const RibbonGraph& graph, std::size_t cap) {
  VerifyReport report;
  for (Method m : {Method::StateSum, Method::SpanningTree, Method::QuasiTree, Method::Recursive}) {
    report.results.push_back(compute(graph, m, cap));
  }
  const BrtResult& reference = report.results.front();
  for (std::size_t i = 1; i < report.results.size(); ++i) {
    const BrtResult& other = report.results[i];
    if (other.polynomial != reference.polynomial) {
      report.mismatches.push_back(std::string(to_string(reference.method)) + " != " +
                                  std::string(to_string(other.method)) + ": " + reference.polynomial.to_string() +
                                  " != " + other.polynomial.to_string());
    }
  }
  report.all_equal = report.mismatches.empty();

  const MPoly at_z_one = substitute(reference.polynomial, MPoly::X(), MPoly::Y(), MPoly(1), MPoly::T());
  const MPoly tutte = tutte_polynomial(underlying_graph(graph));
  const MPoly tutte_shifted = substitute(tutte, MPoly::X(), one_plus(MPoly::Y()), MPoly::Z(), MPoly::T());
  report.specialization_holds = at_z_one == tutte_shifted;

  report.quasi_tree_not_more_terms = report.results[2].term_count <= reference.term_count;
  return report;
}

DualityReport duality_check(const RibbonGraph& graph, std::uint64_t seed, std::size_t point_count, std::size_t cap) {
  if (!graph.connected()) throw Error(ErrorCode::Disconnected, "duality needs a connected graph");
  if (graph.edge_count() > cap) {
    throw Error(ErrorCode::SizeLimit, std::to_string(graph.edge_count()) + " edges exceed the cap of " + std::to_string(cap));
  }
  DualityReport report;
  report.genus = graph.genus();
  const RibbonGraph dual = dual_graph(graph);

  const auto quasi_trees = enumerate_quasi_trees(graph);
  const auto dual_quasi_trees = enumerate_quasi_trees(dual);
  report.histogram = genus_histogram(quasi_trees);
  report.dual_histogram = genus_histogram(dual_quasi_trees);

  std::set<std::pair<EdgeSet, std::size_t>> dual_set;
  for (const auto& qt : dual_quasi_trees) dual_set.emplace(qt.edges, qt.genus());
  report.bijection_holds = quasi_trees.size() == dual_quasi_trees.size();
  for (const auto& qt : quasi_trees) {
    if (qt.genus() > report.genus ||
        !dual_set.contains({qt.edges.complement(graph.edge_count()), report.genus - qt.genus()})) {
      report.bijection_holds = false;
    }
  }

  const MPoly c = brt_recursive(graph).polynomial;
  const MPoly c_dual = brt_recursive(dual).polynomial;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 5);
  std::set<std::pair<Rational, Rational>> seen;
  report.swapped_identity_holds = true;
  report.shifted_identity_holds = true;
  while (report.points.size() < point_count) {
    const Rational x(numerator(rng), denominator(rng));
    const Rational y(numerator(rng), denominator(rng));
    if (x == 1 || y == 0 || !seen.emplace(x, y).second) continue;
    DualityPoint p;
    p.x = x;
    p.y = y;
    p.z = 1 / ((x - 1) * y);
    const Rational y_g = rational_pow(y, report.genus);
    p.lhs = rational_pow(x - 1, report.genus) * evaluate(c, {x, y, p.z, 0});
    p.rhs_swapped = y_g * evaluate(c_dual, {y, x, p.z, 0});
    p.rhs_shifted = y_g * evaluate(c_dual, {y + 1, x - 1, p.z, 0});
    report.swapped_identity_holds = report.swapped_identity_holds && p.lhs == p.rhs_swapped;
    report.shifted_identity_holds = report.shifted_identity_holds && p.lhs == p.rhs_shifted;
    report.points.push_back(std::move(p));
  }
  return report;
}

}  // namespace brt
