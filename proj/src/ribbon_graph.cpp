#include "brt/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/pending/disjoint_sets.hpp>

#include "brt/error.hpp"

namespace brt {

namespace {

using DisjointSets = boost::disjoint_sets_with_storage<>;

std::size_t count_sets(DisjointSets& sets, std::size_t size) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size; ++i) count += sets.find_set(i) == i ? 1 : 0;
  return count;
}

}  // namespace

struct GraphSurgery {
  /// Keeps the listed half-edges (ascending), relabeling them 1..m in order.
  /// `next0` gives the sigma0-successor of a kept label among kept labels.
  template <typename Next>
  static RibbonGraph compress(const RibbonGraph& src, const std::vector<Label>& kept, Next next0) {
    if (kept.empty()) {
      RibbonGraph out;
      return out;
    }
    std::vector<Label> new_label(src.half_edge_count() + 1, 0);
    for (std::size_t i = 0; i < kept.size(); ++i) new_label[static_cast<std::size_t>(kept[i])] = static_cast<Label>(i + 1);

    std::vector<Label> s0(kept.size());
    std::vector<Label> s1(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      s0[i] = new_label[static_cast<std::size_t>(next0(kept[i]))];
      s1[i] = new_label[static_cast<std::size_t>(src.sigma1()(kept[i]))];
    }
    RibbonGraph out(Perm(std::move(s0)), Perm(std::move(s1)));

    std::vector<EdgeIndex> order;
    for (EdgeIndex old_edge : src.edge_order()) {
      const Label mapped = new_label[static_cast<std::size_t>(src.edge(old_edge)[0])];
      if (mapped != 0) order.push_back(out.edge_of(mapped));
    }
    out = out.with_edge_order(std::move(order));
    for (std::size_t i = 0; i < kept.size(); ++i) {
      out.source_labels_[i] = src.source_labels_[static_cast<std::size_t>(kept[i] - 1)];
    }
    return out;
  }
};

RibbonGraph::RibbonGraph() { derive(); }

RibbonGraph::RibbonGraph(Perm sigma0, Perm sigma1) : sigma0_(std::move(sigma0)), sigma1_(std::move(sigma1)) {
  if (sigma0_.size() != sigma1_.size()) {
    throw Error(ErrorCode::NotPartition, "sigma0 and sigma1 act on different label sets");
  }
  for (Label i = 1; i <= static_cast<Label>(sigma1_.size()); ++i) {
    if (sigma1_(i) == i || sigma1_(sigma1_(i)) != i) {
      throw Error(ErrorCode::NotInvolution, "sigma1 is not a fixed-point-free involution at " + std::to_string(i));
    }
  }
  if (sigma1_.size() / 2 > EdgeSet::kMaxEdges) {
    throw Error(ErrorCode::InvalidArgument, "at most 64 edges are supported");
  }
  derive();
}

void RibbonGraph::derive() {
  const std::size_t size = sigma0_.size();
  sigma2_ = (sigma0_ * sigma1_).inverse();
  vertices_ = sigma0_.cycles();
  faces_ = sigma2_.cycles();

  vertex_of_.assign(size, 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (Label i : vertices_[v]) vertex_of_[static_cast<std::size_t>(i - 1)] = v;
  }

  edges_.clear();
  edge_of_.assign(size, 0);
  for (Label i = 1; i <= static_cast<Label>(size); ++i) {
    if (i < sigma1_(i)) {
      edge_of_[static_cast<std::size_t>(i - 1)] = edges_.size();
      edge_of_[static_cast<std::size_t>(sigma1_(i) - 1)] = edges_.size();
      edges_.push_back({i, sigma1_(i)});
    }
  }

  order_.resize(edges_.size());
  std::iota(order_.begin(), order_.end(), EdgeIndex{0});
  rank_ = order_;

  source_labels_.resize(size);
  std::iota(source_labels_.begin(), source_labels_.end(), Label{1});

  if (size == 0) {
    component_count_ = 1;
    return;
  }
  DisjointSets sets(vertices_.size());
  for (const auto& [a, b] : edges_) sets.union_set(vertex_of(a), vertex_of(b));
  component_count_ = count_sets(sets, vertices_.size());
}

RibbonGraph RibbonGraph::with_edge_order(std::vector<EdgeIndex> order) const {
  if (order.size() != edges_.size()) {
    throw Error(ErrorCode::InvalidArgument, "edge order must list every edge exactly once");
  }
  std::vector<std::size_t> rank(edges_.size(), edges_.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (order[r] >= edges_.size() || rank[order[r]] != edges_.size()) {
      throw Error(ErrorCode::InvalidArgument, "edge order must list every edge exactly once");
    }
    rank[order[r]] = r;
  }
  RibbonGraph out = *this;
  out.order_ = std::move(order);
  out.rank_ = std::move(rank);
  return out;
}

std::size_t RibbonGraph::genus() const {
  const std::size_t twice = 2 * component_count() + edge_count() - vertex_count() - face_count();
  return twice / 2;
}

std::size_t RestrictedSubgraph::face_count() const {
  return (bands.is_trivial() ? 0 : bands.face_count()) + isolated_vertices;
}

std::size_t RestrictedSubgraph::component_count() const {
  return (bands.is_trivial() ? 0 : bands.component_count()) + isolated_vertices;
}

RibbonGraph build_ribbon_graph(std::span<const Cycle> sigma0_cycles, std::span<const HalfEdgePair> sigma1_pairs) {
  std::size_t size = 0;
  for (const auto& c : sigma0_cycles) {
    if (c.empty()) throw Error(ErrorCode::NotPartition, "empty vertex cycle");
    size += c.size();
  }
  Perm sigma0 = Perm::from_cycles(sigma0_cycles, size);
  if (sigma0.cycle_count() != sigma0_cycles.size()) {
    throw Error(ErrorCode::NotPartition, "sigma0 cycles do not partition the half-edges");
  }
  if (2 * sigma1_pairs.size() != size) {
    throw Error(ErrorCode::NotInvolution, "sigma1 must pair all " + std::to_string(size) + " half-edges");
  }
  std::vector<Label> s1(size, 0);
  for (const auto& [a, b] : sigma1_pairs) {
    for (Label x : {a, b}) {
      if (x < 1 || static_cast<std::size_t>(x) > size) {
        throw Error(ErrorCode::NotPartition, "sigma1 label " + std::to_string(x) + " out of range");
      }
    }
    if (a == b || s1[static_cast<std::size_t>(a - 1)] != 0 || s1[static_cast<std::size_t>(b - 1)] != 0) {
      throw Error(ErrorCode::NotInvolution, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") repeats or fixes a label");
    }
    s1[static_cast<std::size_t>(a - 1)] = b;
    s1[static_cast<std::size_t>(b - 1)] = a;
  }
  return RibbonGraph(std::move(sigma0), Perm(std::move(s1)));
}

GraphCounts graph_counts(const RibbonGraph& graph) {
  return {graph.vertex_count(), graph.edge_count(), graph.face_count(),
          graph.component_count(), graph.genus(), graph.nullity()};
}

Perm boundary_walk(const RibbonGraph& graph, EdgeSet subgraph) {
  std::vector<Label> images(graph.half_edge_count());
  for (Label i = 1; i <= static_cast<Label>(images.size()); ++i) {
    images[static_cast<std::size_t>(i - 1)] =
        subgraph.contains(graph.edge_of(i)) ? graph.sigma0()(graph.sigma1()(i)) : graph.sigma0()(i);
  }
  return Perm(std::move(images));
}

std::vector<Cycle> boundary_components(const RibbonGraph& graph, EdgeSet subgraph) {
  if (graph.is_trivial()) return {Cycle{}};
  return boundary_walk(graph, subgraph).cycles();
}

std::size_t subgraph_component_count(const RibbonGraph& graph, EdgeSet subgraph) {
  if (graph.is_trivial()) return 1;
  DisjointSets sets(graph.vertex_count());
  for (EdgeIndex e : subgraph.elements()) sets.union_set(graph.vertex_of(graph.edge(e)[0]), graph.vertex_of(graph.edge(e)[1]));
  return count_sets(sets, graph.vertex_count());
}

SpanningSubgraph analyze_subgraph(const RibbonGraph& graph, EdgeSet subgraph) {
  SpanningSubgraph h;
  h.edges = subgraph;
  h.k = subgraph_component_count(graph, subgraph);
  h.e = subgraph.size();
  h.f = graph.is_trivial() ? 1 : boundary_walk(graph, subgraph).cycle_count();
  const std::size_t v = graph.vertex_count();
  h.n = h.k + h.e - v;
  h.g = (2 * h.k + h.e - v - h.f) / 2;
  return h;
}

RestrictedSubgraph restrict_subgraph(const RibbonGraph& graph, EdgeSet subgraph) {
  RestrictedSubgraph out;
  std::vector<Label> kept;
  std::vector<bool> touched(graph.vertex_count(), false);
  for (Label i = 1; i <= static_cast<Label>(graph.half_edge_count()); ++i) {
    if (subgraph.contains(graph.edge_of(i))) {
      kept.push_back(i);
      touched[graph.vertex_of(i)] = true;
    }
  }
  out.isolated_vertices = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), false));
  out.bands = GraphSurgery::compress(graph, kept, [&](Label i) {
    Label j = graph.sigma0()(i);
    while (!subgraph.contains(graph.edge_of(j))) j = graph.sigma0()(j);
    return j;
  });
  return out;
}

bool is_bridge(const RibbonGraph& graph, EdgeIndex e) {
  if (graph.is_loop(e)) return false;
  const EdgeSet rest = graph.all_edges().without(e);
  return subgraph_component_count(graph, rest) > subgraph_component_count(graph, graph.all_edges());
}

RibbonGraph delete_edge(const RibbonGraph& graph, EdgeIndex e) {
  if (e >= graph.edge_count()) throw Error(ErrorCode::InvalidArgument, "no edge " + std::to_string(e));
  const auto [a, b] = graph.edge(e);
  std::vector<Label> kept;
  std::vector<bool> touched(graph.vertex_count(), false);
  for (Label i = 1; i <= static_cast<Label>(graph.half_edge_count()); ++i) {
    if (i != a && i != b) {
      kept.push_back(i);
      touched[graph.vertex_of(i)] = true;
    }
  }
  const bool stranded = std::count(touched.begin(), touched.end(), false) > 0;
  if (stranded && !(kept.empty() && graph.vertex_count() == 1)) {
    throw Error(ErrorCode::IsolatedVertex, "deleting edge " + std::to_string(e) + " leaves an isolated vertex");
  }
  return GraphSurgery::compress(graph, kept, [&](Label i) {
    Label j = graph.sigma0()(i);
    while (j == a || j == b) j = graph.sigma0()(j);
    return j;
  });
}

RibbonGraph contract_edge(const RibbonGraph& graph, EdgeIndex e) {
  if (e >= graph.edge_count()) throw Error(ErrorCode::InvalidArgument, "no edge " + std::to_string(e));
  if (graph.is_loop(e)) throw Error(ErrorCode::LoopContraction, "edge " + std::to_string(e) + " is a loop");
  const auto [a, b] = graph.edge(e);
  std::vector<Label> kept;
  for (Label i = 1; i <= static_cast<Label>(graph.half_edge_count()); ++i) {
    if (i != a && i != b) kept.push_back(i);
  }
  const Perm& s0 = graph.sigma0();
  return GraphSurgery::compress(graph, kept, [&](Label i) {
    Label j = s0(i);
    while (j == a || j == b) j = (j == a) ? s0(b) : s0(a);
    return j;
  });
}

RibbonGraph dual_graph(const RibbonGraph& graph) {
  if (!graph.connected()) throw Error(ErrorCode::Disconnected, "dual requires a connected graph");
  if (graph.is_trivial()) return graph;
  return RibbonGraph(graph.sigma2(), graph.sigma1()).with_edge_order(graph.edge_order());
}

std::vector<RibbonGraph> connected_components(const RibbonGraph& graph) {
  if (graph.connected()) return {graph};
  DisjointSets sets(graph.vertex_count());
  for (const auto& [a, b] : graph.edges()) sets.union_set(graph.vertex_of(a), graph.vertex_of(b));
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const std::size_t r = sets.find_set(v);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  std::vector<RibbonGraph> out;
  for (std::size_t root : roots) {
    std::vector<Label> kept;
    for (Label i = 1; i <= static_cast<Label>(graph.half_edge_count()); ++i) {
      if (sets.find_set(graph.vertex_of(i)) == root) kept.push_back(i);
    }
    out.push_back(GraphSurgery::compress(graph, kept, [&](Label i) { return graph.sigma0()(i); }));
  }
  return out;
}

}  // namespace brt
