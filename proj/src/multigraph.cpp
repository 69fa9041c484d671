#include "brt/multigraph.hpp"

#include <algorithm>
#include <utility>

#include <boost/pending/disjoint_sets.hpp>

#include "brt/error.hpp"
#include "brt/ribbon_graph.hpp"

namespace brt {

namespace {

using DisjointSets = boost::disjoint_sets_with_storage<>;
using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

std::size_t components(std::size_t vertex_count, const EdgeList& edges, std::size_t skip = SIZE_MAX) {
  DisjointSets sets(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != skip) sets.union_set(edges[i].first, edges[i].second);
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) count += sets.find_set(v) == v ? 1 : 0;
  return count;
}

MPoly tutte_rec(std::size_t vertex_count, const EdgeList& edges) {
  const std::size_t base = components(vertex_count, edges);
  for (std::size_t i = edges.size(); i-- > 0;) {
    const auto [a, b] = edges[i];
    if (a == b || components(vertex_count, edges, i) > base) continue;

    EdgeList deleted = edges;
    deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(i));

    // Contract by merging the larger endpoint into the smaller and closing the gap.
    const std::size_t keep = std::min(a, b);
    const std::size_t drop = std::max(a, b);
    EdgeList contracted;
    contracted.reserve(deleted.size());
    for (auto [u, v] : deleted) {
      auto remap = [&](std::size_t w) {
        if (w == drop) w = keep;
        return w > drop ? w - 1 : w;
      };
      contracted.emplace_back(remap(u), remap(v));
    }
    return tutte_rec(vertex_count, deleted) + tutte_rec(vertex_count - 1, contracted);
  }
  std::uint32_t loops = 0;
  for (auto [a, b] : edges) loops += a == b ? 1 : 0;
  const auto bridges = static_cast<std::uint32_t>(edges.size()) - loops;
  return MPoly::monomial({bridges, loops, 0, 0});
}

}  // namespace

std::size_t MultiGraph::component_count() const {
  EdgeList list;
  for (const auto& e : edges) list.emplace_back(e.a, e.b);
  return components(vertex_count, list);
}

MultiGraph underlying_graph(const RibbonGraph& graph) {
  MultiGraph out;
  out.vertex_count = graph.vertex_count();
  for (EdgeIndex e : graph.edge_order()) {
    out.edges.push_back({graph.vertex_of(graph.edge(e)[0]), graph.vertex_of(graph.edge(e)[1]), e});
  }
  return out;
}

MPoly tutte_polynomial(const MultiGraph& graph) {
  EdgeList list;
  for (const auto& e : graph.edges) list.emplace_back(e.a, e.b);
  return tutte_rec(graph.vertex_count, list);
}

std::vector<SpanningTree> spanning_trees_with_activities(const MultiGraph& graph) {
  if (graph.component_count() != 1) throw Error(ErrorCode::Disconnected, "spanning trees need a connected graph");
  const std::size_t m = graph.edges.size();
  const std::size_t needed = graph.vertex_count - 1;

  std::vector<std::vector<bool>> trees;
  std::vector<bool> chosen(m, false);
  auto search = [&](auto&& self, std::size_t slot, std::size_t taken, const DisjointSets& sets) -> void {
    if (taken == needed) {
      trees.push_back(chosen);
      return;
    }
    if (slot == m || m - slot < needed - taken) return;
    self(self, slot + 1, taken, sets);
    const auto& e = graph.edges[slot];
    DisjointSets next = sets;
    if (next.find_set(e.a) == next.find_set(e.b)) return;
    next.union_set(e.a, e.b);
    chosen[slot] = true;
    self(self, slot + 1, taken + 1, next);
    chosen[slot] = false;
  };
  search(search, 0, 0, DisjointSets(graph.vertex_count));

  std::vector<SpanningTree> out;
  for (const auto& in_tree : trees) {
    SpanningTree tree;
    tree.activity.assign(m, Activity::ExternalDead);
    // cut[s][t]: non-tree or tree edge t crosses the cut of tree edge s.
    std::vector<std::vector<bool>> cut(m);
    for (std::size_t s = 0; s < m; ++s) {
      if (!in_tree[s]) continue;
      tree.edges.insert(graph.edges[s].id);
      DisjointSets sets(graph.vertex_count);
      for (std::size_t t = 0; t < m; ++t) {
        if (in_tree[t] && t != s) sets.union_set(graph.edges[t].a, graph.edges[t].b);
      }
      cut[s].assign(m, false);
      for (std::size_t t = 0; t < m; ++t) {
        cut[s][t] = sets.find_set(graph.edges[t].a) != sets.find_set(graph.edges[t].b);
      }
      const bool active = std::find(cut[s].begin(), cut[s].begin() + static_cast<std::ptrdiff_t>(s), true) ==
                          cut[s].begin() + static_cast<std::ptrdiff_t>(s);
      tree.activity[s] = make_activity(true, active);
      if (active) ++tree.internally_active;
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (in_tree[t]) continue;
      // t is the lowest edge of its cycle iff no lower tree edge has t in its cut.
      bool active = true;
      for (std::size_t s = 0; s < t; ++s) {
        if (in_tree[s] && cut[s][t]) active = false;
      }
      tree.activity[t] = make_activity(false, active);
      if (active) tree.externally_active.insert(graph.edges[t].id);
    }
    out.push_back(std::move(tree));
  }
  return out;
}

}  // namespace brt
