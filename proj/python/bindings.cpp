#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brt/error.hpp"
#include "brt/expansions.hpp"
#include "brt/io.hpp"
#include "brt/quasi_tree.hpp"

namespace py = pybind11;
using namespace brt;

namespace {

Method method_from(const std::string& name) {
  for (Method m : {Method::StateSum, Method::SpanningTree, Method::QuasiTree, Method::Recursive}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
}

RibbonGraph make_graph(const std::vector<Cycle>& sigma0, const std::vector<HalfEdgePair>& sigma1,
                       const std::optional<std::vector<std::size_t>>& edge_order) {
  GraphDocument doc{sigma0, sigma1, edge_order};
  return to_ribbon_graph(doc);
}

py::dict counts_dict(const RibbonGraph& g) {
  const GraphCounts c = graph_counts(g);
  py::dict d;
  d["v"] = c.v;
  d["e"] = c.e;
  d["f"] = c.f;
  d["k"] = c.k;
  d["g"] = c.g;
  d["n"] = c.n;
  return d;
}

py::list quasi_tree_rows(const RibbonGraph& g) {
  py::list rows;
  for (const auto& qt : enumerate_quasi_trees(g)) {
    py::dict row;
    row["quasi_tree"] = edge_bitstring(g, qt.edges);
    row["chord_diagram"] = qt.diagram.cycle;
    row["activity"] = ordered_activity_string(g, qt.activity);
    row["genus"] = qt.genus();
    row["dead_nullity"] = qt.dead.n;
    row["dead_genus"] = qt.dead.g;
    row["external_live"] = qt.external_live.size();
    row["weight_factored"] = factored_weight(qt);
    row["weight"] = quasi_tree_weight(qt).to_string();
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bollobas-Riordan-Tutte polynomial of oriented ribbon graphs";

  static py::exception<Error> error(m, "RibbonGraphError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<RibbonGraph>(m, "RibbonGraph")
      .def(py::init(&make_graph), py::arg("sigma0"), py::arg("sigma1"), py::arg("edge_order") = py::none(),
           "sigma0 as vertex cycles, sigma1 as half-edge pairs; edge_order 1-based, lowest first")
      .def_static("from_text", [](const std::string& text) { return to_ribbon_graph(parse_graph_document(text)); })
      .def_property_readonly("vertices", &RibbonGraph::vertices)
      .def_property_readonly("edges", &RibbonGraph::edges)
      .def_property_readonly("faces", &RibbonGraph::faces)
      .def_property_readonly("genus", &RibbonGraph::genus)
      .def_property_readonly("edge_order", [](const RibbonGraph& g) {
        std::vector<std::size_t> out;
        for (EdgeIndex e : g.edge_order()) out.push_back(e + 1);
        return out;
      })
      .def("counts", &counts_dict)
      .def("with_edge_order", [](const RibbonGraph& g, const std::vector<std::size_t>& order) {
        return apply_edge_order(g, order);
      })
      .def("delete_edge", [](const RibbonGraph& g, std::size_t e) { return delete_edge(g, e - 1); }, py::arg("edge"))
      .def("contract_edge", [](const RibbonGraph& g, std::size_t e) { return contract_edge(g, e - 1); },
           py::arg("edge"))
      .def("dual", &dual_graph)
      .def("__repr__", [](const RibbonGraph& g) {
        return "RibbonGraph(sigma0=" + cycles_string(g.vertices()) + ", v=" + std::to_string(g.vertex_count()) +
               ", e=" + std::to_string(g.edge_count()) + ", f=" + std::to_string(g.face_count()) +
               ", g=" + std::to_string(g.genus()) + ")";
      });

  m.def(
      "polynomial",
      [](const RibbonGraph& g, const std::string& method, std::size_t cap) {
        return compute(g, method_from(method), cap).polynomial.to_string();
      },
      py::arg("graph"), py::arg("method") = "quasitree", py::arg("cap") = kDefaultSizeCap,
      "C(G) as a canonical string; method is statesum, tree, quasitree or recursive");

  m.def("quasi_trees", &quasi_tree_rows, py::arg("graph"));

  m.def(
      "genus_counts",
      [](const RibbonGraph& g) {
        const MPoly q0 = at_y_zero(counting_substitution(brt_recursive(g).polynomial));
        return ascending_t_string(q0);
      },
      py::arg("graph"), "q(t, 0) as an ascending polynomial in t");

  m.def(
      "verify",
      [](const RibbonGraph& g, std::size_t cap) {
        const VerifyReport r = verify_all(g, cap);
        py::dict d;
        py::dict counts;
        for (const auto& res : r.results) counts[py::str(std::string(to_string(res.method)))] = res.term_count;
        d["polynomial"] = r.results.front().polynomial.to_string();
        d["term_counts"] = counts;
        d["all_equal"] = r.all_equal;
        d["mismatches"] = r.mismatches;
        d["specialization_holds"] = r.specialization_holds;
        d["quasi_tree_not_more_terms"] = r.quasi_tree_not_more_terms;
        return d;
      },
      py::arg("graph"), py::arg("cap") = kDefaultSizeCap);

  m.def(
      "duality",
      [](const RibbonGraph& g, std::uint64_t seed, std::size_t points) {
        const DualityReport r = duality_check(g, seed, points);
        py::dict d;
        d["genus"] = r.genus;
        d["histogram"] = r.histogram;
        d["dual_histogram"] = r.dual_histogram;
        d["bijection_holds"] = r.bijection_holds;
        d["swapped_identity_holds"] = r.swapped_identity_holds;
        d["shifted_identity_holds"] = r.shifted_identity_holds;
        return d;
      },
      py::arg("graph"), py::arg("seed") = 1, py::arg("points") = 20);
}
