#pragma once

// Test-only reference computations and graph generators. Nothing here calls
// the boundary-walk, resolution-tree or deletion/contraction code paths it is
// used to check.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brt/multigraph.hpp"
#include "brt/poly.hpp"
#include "brt/quasi_tree.hpp"
#include "brt/ribbon_graph.hpp"

namespace brt::testing {

/// The worked example: three vertices, six edges, genus two.
RibbonGraph worked_example_graph();
/// Two embeddings of one loop plus a double edge: planar and genus one.
RibbonGraph planar_embedding();
RibbonGraph toroidal_embedding();
/// One vertex with two interleaved loops.
RibbonGraph two_interleaved_loops();

/// Faces of H counted on the standalone restricted ribbon graph.
std::size_t oracle_face_count(const RibbonGraph& graph, EdgeSet subgraph);
std::size_t oracle_component_count(const RibbonGraph& graph, EdgeSet subgraph);
std::size_t oracle_genus(const RibbonGraph& graph, EdgeSet subgraph);

/// {H : k(H) = 1, f(H) = 1} by exhaustion, with f from restrict_subgraph.
std::set<EdgeSet> brute_force_quasi_trees(const RibbonGraph& graph);

/// T(x, y) = sum over W of (x-1)^(k(W)-k(G)) (y-1)^n(W), x as X and y as Y.
MPoly tutte_by_subgraphs(const MultiGraph& graph);

/// C(G) by the subgraph sum with all counts taken from restrict_subgraph.
MPoly brt_by_restriction(const RibbonGraph& graph);

/// Checks, for every S1 within the internally live edges and S2 within the
/// externally live edges of Q, with D the internally dead subgraph:
///   k(D+S) = k(D+S1), n(D+S) = n(D+S1) + |S2|, g(D+S) = g(D+S1),
///   n(D+S1) = n(D) + n(W), g(D+S1) = g(D) + n(W), W = S1 inside G_Q,
/// and the single-edge face changes f(D+e) = f(D) +/- 1.
/// Returns a description of the first failure, empty when all hold.
std::string subset_identity_failure(const RibbonGraph& graph, const QuasiTree& qt);

/// Random connected ribbon graph: random spanning tree on `vertices`
/// vertices plus `extra` further edges (loops allowed), random rotations.
RibbonGraph random_connected_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t extra);

/// Random genus-zero ribbon graph with the given number of edges.
RibbonGraph random_planar_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t edges);

/// Every one-vertex ribbon graph with `loops` loops: sigma0 = (1 2 ... 2n),
/// sigma1 ranging over all perfect matchings.
std::vector<RibbonGraph> all_one_vertex_graphs(std::size_t loops);

/// Dense random order of the edges.
std::vector<EdgeIndex> random_order(std::mt19937_64& rng, std::size_t edge_count);

}  // namespace brt::testing
