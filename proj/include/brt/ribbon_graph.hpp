#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "brt/edge_set.hpp"
#include "brt/perm.hpp"

namespace brt {

using HalfEdgePair = std::array<Label, 2>;

// An oriented ribbon graph given by permutations (sigma0, sigma1, sigma2) of
// the half-edges {1, ..., 2n} with sigma0 * sigma1 * sigma2 = 1, composed right
// to left. Orbits of sigma0 are vertices, of sigma1 edges, of sigma2 faces.
//
// Edge e is the pair {i, sigma1(i)}; edges are indexed 0..n-1 by their minimum
// half-edge label. The edge order used for activities defaults to that index
// order and may be overridden.
//
// The only graph without half-edges is the single isolated vertex.
class RibbonGraph {
 public:
  /// The single isolated vertex (2n = 0).
  RibbonGraph();

  /// Validates sigma1 (fixed-point free involution) and derives sigma2.
  RibbonGraph(Perm sigma0, Perm sigma1);

  /// Copy with a different edge order, listed lowest first.
  RibbonGraph with_edge_order(std::vector<EdgeIndex> order) const;

  const Perm& sigma0() const { return sigma0_; }
  const Perm& sigma1() const { return sigma1_; }
  const Perm& sigma2() const { return sigma2_; }

  std::size_t half_edge_count() const { return sigma0_.size(); }
  std::size_t vertex_count() const { return is_trivial() ? 1 : vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return is_trivial() ? 1 : faces_.size(); }
  std::size_t component_count() const { return component_count_; }
  std::size_t genus() const;
  std::size_t nullity() const { return edge_count() + component_count() - vertex_count(); }
  bool is_trivial() const { return sigma0_.size() == 0; }
  bool connected() const { return component_count_ == 1; }

  const std::vector<Cycle>& vertices() const { return vertices_; }
  const std::vector<Cycle>& faces() const { return faces_; }
  const HalfEdgePair& edge(EdgeIndex e) const { return edges_[e]; }
  const std::vector<HalfEdgePair>& edges() const { return edges_; }
  EdgeIndex edge_of(Label i) const { return edge_of_[static_cast<std::size_t>(i - 1)]; }
  std::size_t vertex_of(Label i) const { return vertex_of_[static_cast<std::size_t>(i - 1)]; }
  bool is_loop(EdgeIndex e) const { return vertex_of(edges_[e][0]) == vertex_of(edges_[e][1]); }
  EdgeSet all_edges() const { return EdgeSet::all(edges_.size()); }

  /// Edges from lowest to highest.
  const std::vector<EdgeIndex>& edge_order() const { return order_; }
  std::size_t rank(EdgeIndex e) const { return rank_[e]; }

  /// Label of each current half-edge in the graph this one was derived from
  /// (identity for graphs built directly).
  const std::vector<Label>& source_labels() const { return source_labels_; }

 private:
  friend struct GraphSurgery;
  void derive();

  Perm sigma0_;
  Perm sigma1_;
  Perm sigma2_;
  std::vector<Cycle> vertices_;
  std::vector<Cycle> faces_;
  std::vector<HalfEdgePair> edges_;
  std::vector<EdgeIndex> edge_of_;
  std::vector<std::size_t> vertex_of_;
  std::vector<EdgeIndex> order_;
  std::vector<std::size_t> rank_;
  std::vector<Label> source_labels_;
  std::size_t component_count_ = 1;
};

struct GraphCounts {
  std::size_t v = 0;
  std::size_t e = 0;
  std::size_t f = 0;
  std::size_t k = 0;
  std::size_t g = 0;
  std::size_t n = 0;
  friend bool operator==(const GraphCounts&, const GraphCounts&) = default;
};

/// Counts and topology of a spanning subgraph H of a parent graph.
struct SpanningSubgraph {
  EdgeSet edges;
  std::size_t k = 0;  ///< components, isolated vertices included
  std::size_t e = 0;
  std::size_t n = 0;  ///< nullity k - v + e
  std::size_t f = 0;  ///< boundary components of a regular neighbourhood
  std::size_t g = 0;
};

/// A spanning subgraph as a standalone ribbon graph: the bands of H and the
/// vertices they touch, plus a count of vertices H leaves isolated.
struct RestrictedSubgraph {
  RibbonGraph bands;
  std::size_t isolated_vertices = 0;

  std::size_t face_count() const;
  std::size_t component_count() const;
};

/// Builds a graph from sigma0 cycles and sigma1 pairs on {1, ..., 2n}.
/// Throws NotPartition or NotInvolution on malformed input.
RibbonGraph build_ribbon_graph(std::span<const Cycle> sigma0_cycles, std::span<const HalfEdgePair> sigma1_pairs);

GraphCounts graph_counts(const RibbonGraph& graph);

/// sigma_H(i) = sigma0(i) if edge(i) is not in H, sigma2^-1(i) otherwise.
Perm boundary_walk(const RibbonGraph& graph, EdgeSet subgraph);

/// Boundary curves of a neighbourhood of H, each starting at its minimum label.
std::vector<Cycle> boundary_components(const RibbonGraph& graph, EdgeSet subgraph);

std::size_t subgraph_component_count(const RibbonGraph& graph, EdgeSet subgraph);
SpanningSubgraph analyze_subgraph(const RibbonGraph& graph, EdgeSet subgraph);

RestrictedSubgraph restrict_subgraph(const RibbonGraph& graph, EdgeSet subgraph);

bool is_bridge(const RibbonGraph& graph, EdgeIndex e);

/// Throws IsolatedVertex if removing the edge would strand a vertex in a
/// graph that still has other half-edges.
RibbonGraph delete_edge(const RibbonGraph& graph, EdgeIndex e);

/// Throws LoopContraction for loops.
RibbonGraph contract_edge(const RibbonGraph& graph, EdgeIndex e);

/// sigma0* = sigma2, sigma1* = sigma1; edge indices and order carry over.
RibbonGraph dual_graph(const RibbonGraph& graph);

/// Connected components as separate graphs, ordered by minimum half-edge.
std::vector<RibbonGraph> connected_components(const RibbonGraph& graph);

}  // namespace brt
