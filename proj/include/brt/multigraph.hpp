#pragma once

#include <cstddef>
#include <vector>

#include "brt/activity.hpp"
#include "brt/edge_set.hpp"
#include "brt/poly.hpp"

namespace brt {

class RibbonGraph;

struct MultiEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  EdgeIndex id = 0;  ///< edge index in the graph this one came from

  bool is_loop() const { return a == b; }
};

/// Abstract multigraph; loops and parallel edges allowed. The edge list is
/// kept lowest-ordered first, which is the order used for activities.
struct MultiGraph {
  std::size_t vertex_count = 0;
  std::vector<MultiEdge> edges;

  std::size_t component_count() const;
};

/// Vertices are sigma0 orbits; edges follow the ribbon graph's edge order.
MultiGraph underlying_graph(const RibbonGraph& graph);

/// Tutte polynomial T(x, y), returned with x stored as X and y as Y.
/// Deletion/contraction on the highest-ordered edge that is neither a loop
/// nor a bridge.
MPoly tutte_polynomial(const MultiGraph& graph);

struct SpanningTree {
  EdgeSet edges;                    ///< by MultiEdge::id
  std::vector<Activity> activity;   ///< per position in MultiGraph::edges
  std::size_t internally_active = 0;
  EdgeSet externally_active;        ///< by MultiEdge::id
};

/// All spanning trees with Tutte activities. Throws Disconnected.
std::vector<SpanningTree> spanning_trees_with_activities(const MultiGraph& graph);

}  // namespace brt
