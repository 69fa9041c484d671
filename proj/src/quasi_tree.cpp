#include "brt/quasi_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "brt/error.hpp"

namespace brt {

namespace {

using DisjointSets = boost::disjoint_sets_with_storage<>;

// Resolution-tree node: the next edge to consider is edge_order()[pending - 1].
struct Node {
  PartialResolution rho;
  std::size_t pending = 0;
};

std::string power(const std::string& base, std::size_t exp) {
  if (exp == 0) return {};
  return exp == 1 ? base : base + "^" + std::to_string(exp);
}

}  // namespace

bool ChordDiagram::intersects(EdgeIndex a, EdgeIndex b) const {
  if (a == b) return false;
  auto [lo, hi] = std::minmax(position[static_cast<std::size_t>(chords[a][0] - 1)],
                              position[static_cast<std::size_t>(chords[a][1] - 1)]);
  auto inside = [&](Label x) {
    const std::size_t p = position[static_cast<std::size_t>(x - 1)];
    return lo < p && p < hi;
  };
  return inside(chords[b][0]) != inside(chords[b][1]);
}

ChordDiagram chord_diagram(const RibbonGraph& graph, EdgeSet quasi_tree) {
  ChordDiagram d;
  d.chords = graph.edges();
  if (graph.is_trivial()) return d;
  const Perm walk = boundary_walk(graph, quasi_tree);
  d.cycle.push_back(1);
  for (Label i = walk(1); i != 1; i = walk(i)) d.cycle.push_back(i);
  if (d.cycle.size() != graph.half_edge_count()) {
    throw Error(ErrorCode::NotQuasiTree, "subgraph " + edge_bitstring(graph, quasi_tree) + " has more than one boundary component");
  }
  d.position.resize(d.cycle.size());
  for (std::size_t p = 0; p < d.cycle.size(); ++p) d.position[static_cast<std::size_t>(d.cycle[p] - 1)] = p;
  return d;
}

std::vector<Activity> classify_activities(const RibbonGraph& graph, const ChordDiagram& diagram, EdgeSet quasi_tree) {
  std::vector<Activity> out(graph.edge_count());
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    bool live = true;
    for (EdgeIndex other = 0; other < graph.edge_count() && live; ++other) {
      if (graph.rank(other) < graph.rank(e) && diagram.intersects(e, other)) live = false;
    }
    out[e] = make_activity(quasi_tree.contains(e), live);
  }
  return out;
}

PartialResolution PartialResolution::resolved(EdgeIndex e, EdgeState state) const {
  PartialResolution out = *this;
  out.states_[e] = state;
  return out;
}

EdgeSet PartialResolution::ones() const {
  EdgeSet s;
  for (EdgeIndex e = 0; e < states_.size(); ++e) {
    if (states_[e] == EdgeState::One) s.insert(e);
  }
  return s;
}

EdgeSet PartialResolution::unresolved() const {
  EdgeSet s;
  for (EdgeIndex e = 0; e < states_.size(); ++e) {
    if (states_[e] == EdgeState::Unresolved) s.insert(e);
  }
  return s;
}

bool PartialResolution::contains(EdgeSet subgraph) const {
  for (EdgeIndex e = 0; e < states_.size(); ++e) {
    if (states_[e] == EdgeState::One && !subgraph.contains(e)) return false;
    if (states_[e] == EdgeState::Zero && subgraph.contains(e)) return false;
  }
  return true;
}

std::string PartialResolution::to_string(const RibbonGraph& graph) const {
  std::string out;
  for (EdgeIndex e : graph.edge_order()) out.push_back(static_cast<char>(states_[e]));
  return out;
}

bool boundary_graph_connected(const RibbonGraph& graph, EdgeSet ones, EdgeSet unresolved) {
  if (graph.is_trivial()) return true;
  const auto curves = boundary_components(graph, ones);
  std::vector<std::size_t> curve_of(graph.half_edge_count());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    for (Label i : curves[c]) curve_of[static_cast<std::size_t>(i - 1)] = c;
  }
  DisjointSets sets(curves.size());
  std::size_t remaining = curves.size();
  for (EdgeIndex e : unresolved.elements()) {
    const std::size_t a = sets.find_set(curve_of[static_cast<std::size_t>(graph.edge(e)[0] - 1)]);
    const std::size_t b = sets.find_set(curve_of[static_cast<std::size_t>(graph.edge(e)[1] - 1)]);
    if (a != b) {
      sets.link(a, b);
      --remaining;
    }
  }
  return remaining == 1;
}

bool is_split(const RibbonGraph& graph, const PartialResolution& rho) {
  return !boundary_graph_connected(graph, rho.ones(), rho.unresolved());
}

QuasiTree describe_quasi_tree(const RibbonGraph& graph, EdgeSet edges) {
  QuasiTree qt;
  qt.edges = edges;
  qt.subgraph = analyze_subgraph(graph, edges);
  if (qt.subgraph.f != 1 || qt.subgraph.k != 1) {
    throw Error(ErrorCode::NotQuasiTree, "subgraph " + edge_bitstring(graph, edges) + " is not a quasi-tree");
  }
  qt.diagram = chord_diagram(graph, edges);
  qt.activity = classify_activities(graph, qt.diagram, edges);
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    switch (qt.activity[e]) {
      case Activity::InternalLive: qt.internal_live.insert(e); break;
      case Activity::InternalDead: qt.internal_dead.insert(e); break;
      case Activity::ExternalLive: qt.external_live.insert(e); break;
      case Activity::ExternalDead: break;
    }
  }
  qt.dead = analyze_subgraph(graph, qt.internal_dead);

  DisjointSets sets(graph.vertex_count());
  for (EdgeIndex e : qt.internal_dead.elements()) {
    sets.union_set(graph.vertex_of(graph.edge(e)[0]), graph.vertex_of(graph.edge(e)[1]));
  }
  std::vector<std::size_t> component_of_root(graph.vertex_count(), SIZE_MAX);
  std::vector<std::size_t> component(graph.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const std::size_t root = sets.find_set(v);
    if (component_of_root[root] == SIZE_MAX) component_of_root[root] = next++;
    component[v] = component_of_root[root];
  }
  qt.contracted.vertex_count = next;
  for (EdgeIndex e : graph.edge_order()) {
    if (!qt.internal_live.contains(e)) continue;
    qt.contracted.edges.push_back(
        {component[graph.vertex_of(graph.edge(e)[0])], component[graph.vertex_of(graph.edge(e)[1])], e});
  }
  return qt;
}

std::vector<QuasiTree> enumerate_quasi_trees(const RibbonGraph& graph) {
  if (!graph.connected()) throw Error(ErrorCode::SplitRoot, "every resolution of a disconnected graph is split");
  std::vector<QuasiTree> out;
  std::vector<Node> stack{{PartialResolution(graph.edge_count()), graph.edge_count()}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const EdgeSet ones = node.rho.ones();
    bool branched = false;
    while (node.pending > 0 && !branched) {
      const EdgeIndex e = graph.edge_order()[--node.pending];
      const EdgeSet rest = node.rho.unresolved().without(e);
      const bool zero_ok = boundary_graph_connected(graph, ones, rest);
      const bool one_ok = boundary_graph_connected(graph, ones.with(e), rest);
      if (zero_ok && one_ok) {
        stack.push_back({node.rho.resolved(e, EdgeState::One), node.pending});
        stack.push_back({node.rho.resolved(e, EdgeState::Zero), node.pending});
        branched = true;
      }
    }
    if (branched) continue;

    // Leaf: each nugatory edge is included exactly when the 1-resolution stays unsplit.
    EdgeSet edges = ones;
    const EdgeSet unresolved = node.rho.unresolved();
    for (EdgeIndex e : unresolved.elements()) {
      if (boundary_graph_connected(graph, ones.with(e), unresolved.without(e))) edges.insert(e);
    }
    QuasiTree qt = describe_quasi_tree(graph, edges);
    qt.leaf = node.rho;
    out.push_back(std::move(qt));
  }
  return out;
}

MPoly quasi_tree_weight(const QuasiTree& qt) {
  const MPoly tutte = tutte_polynomial(qt.contracted);
  const MPoly at_point = substitute(tutte, MPoly::X(), one_plus(MPoly::Y() * MPoly::Z()), MPoly::Z(), MPoly::T());
  return MPoly::monomial({0, static_cast<std::uint32_t>(qt.dead.n), static_cast<std::uint32_t>(qt.dead.g), 0}) *
         one_plus(MPoly::Y()).pow(static_cast<std::uint32_t>(qt.external_live.size())) * at_point;
}

std::string factored_weight(const QuasiTree& qt) {
  const MPoly tutte = tutte_polynomial(qt.contracted);
  const MPoly at_point = substitute(tutte, MPoly::X(), one_plus(MPoly::Y() * MPoly::Z()), MPoly::Z(), MPoly::T());
  std::vector<std::string> factors;
  for (const auto& f : {power("Y", qt.dead.n), power("Z", qt.dead.g), power("(1+Y)", qt.external_live.size())}) {
    if (!f.empty()) factors.push_back(f);
  }
  if (at_point != MPoly(1) || factors.empty()) {
    factors.push_back(at_point.term_count() > 1 ? "(" + at_point.to_string() + ")" : at_point.to_string());
  }
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : "*") + f;
  return out;
}

MPoly quasi_tree_expansion(const RibbonGraph& graph) {
  if (!graph.connected()) throw Error(ErrorCode::Disconnected, "quasi-tree expansion needs a connected graph");
  MPoly sum;
  for (const auto& qt : enumerate_quasi_trees(graph)) sum += quasi_tree_weight(qt);
  return sum;
}

std::string edge_bitstring(const RibbonGraph& graph, EdgeSet edges) {
  std::string out;
  for (EdgeIndex e : graph.edge_order()) out.push_back(edges.contains(e) ? '1' : '0');
  return out;
}

std::string ordered_activity_string(const RibbonGraph& graph, const std::vector<Activity>& by_edge) {
  std::string out;
  for (EdgeIndex e : graph.edge_order()) out.push_back(static_cast<char>(by_edge[e]));
  return out;
}

std::vector<std::size_t> genus_histogram(const std::vector<QuasiTree>& quasi_trees) {
  std::vector<std::size_t> out;
  for (const auto& qt : quasi_trees) {
    if (out.size() <= qt.genus()) out.resize(qt.genus() + 1, 0);
    ++out[qt.genus()];
  }
  return out;
}

}  // namespace brt
