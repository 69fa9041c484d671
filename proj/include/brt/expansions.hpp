#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "brt/poly.hpp"
#include "brt/quasi_tree.hpp"
#include "brt/ribbon_graph.hpp"

namespace brt {

enum class Method { StateSum, SpanningTree, QuasiTree, Recursive };

std::string_view to_string(Method method);

struct BrtResult {
  MPoly polynomial;
  Method method = Method::StateSum;
  std::size_t term_count = 0;  ///< subgraphs, (tree, S) pairs, quasi-trees or recursion leaves
  double elapsed_ms = 0.0;
};

inline constexpr std::size_t kDefaultSizeCap = 24;

/// Sum of (X-1)^(k(H)-k) Y^n(H) Z^g(H) over all 2^e spanning subgraphs.
/// Throws SizeLimit when e exceeds `cap`.
BrtResult brt_state_sum(const RibbonGraph& graph, std::size_t cap = kDefaultSizeCap);

/// The same sum restricted to the subgraphs in the interval of `rho`.
MPoly state_sum_over(const RibbonGraph& graph, const PartialResolution& rho);

/// X^i(T) times the sum over S within the externally active edges of T of
/// Y^n(T+S) Z^g(T+S), summed over spanning trees T. Throws Disconnected.
BrtResult brt_spanning_tree_expansion(const RibbonGraph& graph);

/// Inner sum of the spanning-tree expansion for one tree (without X^i(T)).
MPoly spanning_tree_inner_weight(const RibbonGraph& graph, const SpanningTree& tree);

/// Deletion/contraction on the highest-ordered non-loop edge, one-vertex
/// subgraph sum at the base, product over components.
BrtResult brt_recursive(const RibbonGraph& graph);

BrtResult brt_quasi_tree(const RibbonGraph& graph);

BrtResult compute(const RibbonGraph& graph, Method method, std::size_t cap = kDefaultSizeCap);

struct VerifyReport {
  std::vector<BrtResult> results;  ///< in Method order
  bool all_equal = false;
  std::vector<std::string> mismatches;  ///< "method_a != method_b: p != q"
  bool specialization_holds = false;    ///< C(X, Y, 1) == T_G(X, 1 + Y)
  bool quasi_tree_not_more_terms = false;

  bool ok() const { return all_equal && specialization_holds && quasi_tree_not_more_terms; }
};

/// Runs all four methods and cross-checks them. Mismatches are reported,
/// not thrown; SizeLimit and Disconnected propagate.
VerifyReport verify_all(const RibbonGraph& graph, std::size_t cap = kDefaultSizeCap);

struct DualityPoint {
  Rational x;
  Rational y;
  Rational z;
  Rational lhs;              ///< (X-1)^g C(X, Y, Z)
  Rational rhs_swapped;      ///< Y^g C*(Y, X, Z)
  Rational rhs_shifted;      ///< Y^g C*(Y + 1, X - 1, Z)
};

struct DualityReport {
  std::size_t genus = 0;
  std::vector<std::size_t> histogram;       ///< quasi-trees of G by genus
  std::vector<std::size_t> dual_histogram;  ///< quasi-trees of G* by genus
  bool bijection_holds = false;  ///< complements of quasi-trees are the dual's, with genus g - g(Q)
  std::vector<DualityPoint> points;
  bool swapped_identity_holds = false;
  bool shifted_identity_holds = false;
};

/// Quasi-tree bijection with the dual plus the evaluation identity at
/// `point_count` seeded rational points with (X-1) Y Z = 1. Both argument
/// conventions for the dual side are evaluated. Throws Disconnected.
DualityReport duality_check(const RibbonGraph& graph, std::uint64_t seed = 1, std::size_t point_count = 20,
                            std::size_t cap = kDefaultSizeCap);

}  // namespace brt
