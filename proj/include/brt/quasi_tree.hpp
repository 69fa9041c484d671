#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brt/activity.hpp"
#include "brt/multigraph.hpp"
#include "brt/poly.hpp"
#include "brt/ribbon_graph.hpp"

namespace brt {

/// The single boundary curve of a quasi-tree, marked with every half-edge.
struct ChordDiagram {
  Cycle cycle;                        ///< boundary-walk order, starting at half-edge 1
  std::vector<std::size_t> position;  ///< position[label - 1] on the cycle
  std::vector<HalfEdgePair> chords;   ///< one per edge index

  /// True when the endpoints of the two chords alternate around the cycle.
  bool intersects(EdgeIndex a, EdgeIndex b) const;
};

/// Throws NotQuasiTree if the boundary walk of Q has more than one orbit.
ChordDiagram chord_diagram(const RibbonGraph& graph, EdgeSet quasi_tree);

/// A chord is live when it crosses no chord that is lower in the graph's
/// edge order. Result is indexed by edge index.
std::vector<Activity> classify_activities(const RibbonGraph& graph, const ChordDiagram& diagram, EdgeSet quasi_tree);

enum class EdgeState : char { Zero = '0', One = '1', Unresolved = '*' };

/// Assignment of 0, 1 or * to every edge; stands for every full resolution
/// that agrees with it on the resolved edges.
class PartialResolution {
 public:
  PartialResolution() = default;
  explicit PartialResolution(std::size_t edge_count) : states_(edge_count, EdgeState::Unresolved) {}

  std::size_t size() const { return states_.size(); }
  EdgeState operator[](EdgeIndex e) const { return states_[e]; }
  PartialResolution resolved(EdgeIndex e, EdgeState state) const;

  EdgeSet ones() const;
  EdgeSet unresolved() const;
  /// Whether the full resolution `subgraph` lies in this interval.
  bool contains(EdgeSet subgraph) const;
  /// States listed in the graph's edge order, e.g. "****01".
  std::string to_string(const RibbonGraph& graph) const;

  friend bool operator==(const PartialResolution&, const PartialResolution&) = default;

 private:
  std::vector<EdgeState> states_;
};

/// Connectivity of the boundary curves of H joined by the unresolved edges.
/// A partial resolution is split exactly when this is false.
bool boundary_graph_connected(const RibbonGraph& graph, EdgeSet ones, EdgeSet unresolved);
bool is_split(const RibbonGraph& graph, const PartialResolution& rho);

struct QuasiTree {
  EdgeSet edges;
  SpanningSubgraph subgraph;
  ChordDiagram diagram;
  std::vector<Activity> activity;  ///< by edge index
  EdgeSet internal_dead;
  EdgeSet internal_live;
  EdgeSet external_live;
  SpanningSubgraph dead;           ///< D(Q), the internally dead spanning subgraph
  MultiGraph contracted;           ///< components of D(Q) joined by internally live edges
  std::optional<PartialResolution> leaf;

  std::size_t genus() const { return subgraph.g; }
};

/// Chord diagram, activities, D(Q) and G_Q for a known quasi-tree edge set.
QuasiTree describe_quasi_tree(const RibbonGraph& graph, EdgeSet edges);

/// Quasi-trees as leaves of the resolution tree, left (0) before right (1).
/// Throws SplitRoot if the graph is disconnected.
std::vector<QuasiTree> enumerate_quasi_trees(const RibbonGraph& graph);

/// Y^n(D) Z^g(D) (1+Y)^|E| T_GQ(X, 1+YZ).
MPoly quasi_tree_weight(const QuasiTree& qt);
/// The same weight with its factors kept apart, e.g. "Y*(1+Y)*(X^2 + X*Y*Z + X)".
std::string factored_weight(const QuasiTree& qt);

/// Sum of quasi_tree_weight over all quasi-trees. Throws Disconnected.
MPoly quasi_tree_expansion(const RibbonGraph& graph);

/// Membership listed in the graph's edge order, e.g. "011101".
std::string edge_bitstring(const RibbonGraph& graph, EdgeSet edges);
/// Per-edge letters listed in the graph's edge order.
std::string ordered_activity_string(const RibbonGraph& graph, const std::vector<Activity>& by_edge);

/// Quasi-tree count per genus, index = genus.
std::vector<std::size_t> genus_histogram(const std::vector<QuasiTree>& quasi_trees);

}  // namespace brt
