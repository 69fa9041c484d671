#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "brt/poly.hpp"
#include "brt/ribbon_graph.hpp"

namespace brt {

// Graph documents, in either JSON
//   {"sigma0": [[1,2,3,4],[5,6]], "sigma1": [[1,3],[2,6],[4,5]], "edge_order": [2,1,3]}
// or text form
//   sigma0: (1,2,3,4)(5,6)
//   sigma1: (1,3)(2,6)(4,5)
//   edge_order: 2,1,3
// Half-edges and edge indices are 1-based; edge_order lists edges lowest
// first and is optional. '#' starts a comment in the text form.
struct GraphDocument {
  std::vector<Cycle> sigma0;
  std::vector<HalfEdgePair> sigma1;
  std::optional<std::vector<std::size_t>> edge_order;
};

GraphDocument parse_graph_document(std::string_view text);
GraphDocument read_graph_document(const std::filesystem::path& path);

/// 1-based edge indices, lowest first, to a zero-based edge order.
RibbonGraph apply_edge_order(const RibbonGraph& graph, const std::vector<std::size_t>& one_based);
RibbonGraph to_ribbon_graph(const GraphDocument& doc);

nlohmann::json graph_to_json(const RibbonGraph& graph);

/// [{"coeff": 2, "x": 1, "y": 3, "z": 1, "t": 0}, ...]; coefficients outside
/// the int64 range are written as decimal strings.
nlohmann::json poly_to_json(const MPoly& p);
MPoly poly_from_json(const nlohmann::json& terms);

std::string cycles_string(const std::vector<Cycle>& cycles);

}  // namespace brt
