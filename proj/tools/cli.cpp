#include "cli.hpp"

#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "brt/error.hpp"
#include "brt/expansions.hpp"
#include "brt/io.hpp"
#include "brt/multigraph.hpp"
#include "brt/quasi_tree.hpp"

namespace brt::cli {

namespace {

using nlohmann::json;

RibbonGraph load(const RunConfig& cfg) {
  GraphDocument doc;
  if (cfg.input_path == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    doc = parse_graph_document(text);
  } else {
    doc = read_graph_document(cfg.input_path);
  }
  if (cfg.edge_order) doc.edge_order = cfg.edge_order;
  return to_ribbon_graph(doc);
}

MPoly histogram_poly(const std::vector<std::size_t>& histogram) {
  MPoly p;
  for (std::size_t g = 0; g < histogram.size(); ++g) {
    p.add_term({0, 0, 0, static_cast<std::uint32_t>(g)}, BigInt(histogram[g]));
  }
  return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json result_json(const BrtResult& r) {
  return {{"method", std::string(to_string(r.method))},
          {"polynomial", r.polynomial.to_string()},
          {"terms", poly_to_json(r.polynomial)},
          {"term_count", r.term_count},
          {"elapsed_ms", r.elapsed_ms}};
}

std::string contracted_string(const MultiGraph& g) {
  std::string out = "v=" + std::to_string(g.vertex_count);
  for (const auto& e : g.edges) out += " " + std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
  return out;
}

std::string cycle_string(const Cycle& c) { return cycles_string({c}); }

int report_verify(const VerifyReport& report, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::Json) {
    json j;
    j["results"] = json::array();
    for (const auto& r : report.results) j["results"].push_back(result_json(r));
    j["all_equal"] = report.all_equal;
    j["mismatches"] = report.mismatches;
    j["specialization_holds"] = report.specialization_holds;
    j["quasi_tree_not_more_terms"] = report.quasi_tree_not_more_terms;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      out << std::left << std::setw(10) << to_string(r.method) << " summands=" << std::setw(8) << r.term_count
          << std::fixed << std::setprecision(3) << r.elapsed_ms << " ms  " << r.polynomial.to_string() << '\n';
    }
    for (const auto& m : report.mismatches) out << "mismatch: " << m << '\n';
    out << "all methods agree: " << yes_no(report.all_equal) << '\n';
    out << "C(X,Y,1) = T_G(X,1+Y): " << yes_no(report.specialization_holds) << '\n';
    out << "quasi-tree summands " << report.results[2].term_count << " <= state-sum summands "
        << report.results[0].term_count << ": " << yes_no(report.quasi_tree_not_more_terms) << '\n';
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

Method parse_method(const std::string& name) {
  static const std::map<std::string, Method> methods{{"statesum", Method::StateSum},
                                                     {"tree", Method::SpanningTree},
                                                     {"quasitree", Method::QuasiTree},
                                                     {"recursive", Method::Recursive}};
  auto it = methods.find(name);
  if (it == methods.end()) throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
  return it->second;
}

}  // namespace

int run_compute(const RunConfig& cfg, std::ostream& out) {
  const RibbonGraph graph = load(cfg);
  if (cfg.method == "all") return report_verify(verify_all(graph, cfg.size_cap), cfg, out);
  const BrtResult r = compute(graph, parse_method(cfg.method), cfg.size_cap);
  if (cfg.format == OutputFormat::Json) {
    out << result_json(r).dump(2) << '\n';
  } else {
    out << r.polynomial.to_string() << '\n';
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  return report_verify(verify_all(load(cfg), cfg.size_cap), cfg, out);
}

int run_quasi_tree_table(const RunConfig& cfg, std::ostream& out) {
  const RibbonGraph graph = load(cfg);
  const auto quasi_trees = enumerate_quasi_trees(graph);
  MPoly total;
  json rows = json::array();
  std::ostringstream text;
  text << "Q | C_Q | Activity | g,n,gbar,e | G_Q | Weight | Expanded\n";
  for (const auto& qt : quasi_trees) {
    const MPoly weight = quasi_tree_weight(qt);
    total += weight;
    const std::string bits = edge_bitstring(graph, qt.edges);
    const std::string activity = ordered_activity_string(graph, qt.activity);
    std::vector<std::array<std::size_t, 2>> gq_edges;
    for (const auto& e : qt.contracted.edges) gq_edges.push_back({e.a + 1, e.b + 1});
    rows.push_back({{"quasi_tree", bits},
                    {"chord_diagram", qt.diagram.cycle},
                    {"activity", activity},
                    {"genus", qt.genus()},
                    {"dead_nullity", qt.dead.n},
                    {"dead_genus", qt.dead.g},
                    {"external_live", qt.external_live.size()},
                    {"leaf", qt.leaf ? qt.leaf->to_string(graph) : ""},
                    {"contracted_graph", {{"vertices", qt.contracted.vertex_count}, {"edges", gq_edges}}},
                    {"weight_factored", factored_weight(qt)},
                    {"weight", weight.to_string()},
                    {"weight_terms", poly_to_json(weight)}});
    text << bits << " | " << cycle_string(qt.diagram.cycle) << " | " << activity << " | " << qt.genus() << ','
         << qt.dead.n << ',' << qt.dead.g << ',' << qt.external_live.size() << " | " << contracted_string(qt.contracted)
         << " | " << factored_weight(qt) << " | " << weight.to_string() << '\n';
  }
  if (cfg.format == OutputFormat::Json) {
    out << json{{"quasi_trees", rows}, {"count", quasi_trees.size()}, {"polynomial", total.to_string()}}.dump(2)
        << '\n';
  } else {
    out << text.str() << "quasi-trees: " << quasi_trees.size() << '\n' << "sum: " << total.to_string() << '\n';
  }
  return kExitOk;
}

int run_count(const RunConfig& cfg, std::ostream& out) {
  const RibbonGraph graph = load(cfg);
  const MPoly c = brt_recursive(graph).polynomial;
  const MPoly q = counting_substitution(c);
  const MPoly q0 = at_y_zero(q);
  const BigInt total = q0.coefficient_sum();
  const auto histogram = genus_histogram(enumerate_quasi_trees(graph));
  const bool agrees = histogram_poly(histogram) == q0;
  if (cfg.format == OutputFormat::Json) {
    out << json{{"q", q.to_string()},
                {"q_at_y0", ascending_t_string(q0)},
                {"total", total.str()},
                {"histogram", histogram},
                {"enumeration_agrees", agrees}}
               .dump(2)
        << '\n';
  } else {
    out << ascending_t_string(q0) << '\n' << "total: " << total.str() << '\n';
    if (!agrees) out << "enumerated histogram differs: " << ascending_t_string(histogram_poly(histogram)) << '\n';
  }
  return agrees ? kExitOk : kExitMismatch;
}

int run_dual(const RunConfig& cfg, std::ostream& out) {
  const RibbonGraph graph = load(cfg);
  const DualityReport report = duality_check(graph, cfg.seed, 20, cfg.size_cap);
  std::size_t swapped = 0;
  std::size_t shifted = 0;
  for (const auto& p : report.points) {
    swapped += p.lhs == p.rhs_swapped ? 1 : 0;
    shifted += p.lhs == p.rhs_shifted ? 1 : 0;
  }
  if (cfg.format == OutputFormat::Json) {
    json points = json::array();
    for (const auto& p : report.points) {
      points.push_back({{"x", p.x.str()},
                        {"y", p.y.str()},
                        {"z", p.z.str()},
                        {"lhs", p.lhs.str()},
                        {"rhs_swapped", p.rhs_swapped.str()},
                        {"rhs_shifted", p.rhs_shifted.str()}});
    }
    out << json{{"genus", report.genus},
                {"histogram", report.histogram},
                {"dual_histogram", report.dual_histogram},
                {"bijection_holds", report.bijection_holds},
                {"swapped_identity_holds", report.swapped_identity_holds},
                {"shifted_identity_holds", report.shifted_identity_holds},
                {"points", points}}
               .dump(2)
        << '\n';
  } else {
    out << "genus: " << report.genus << '\n'
        << "quasi-tree histogram: " << ascending_t_string(histogram_poly(report.histogram)) << '\n'
        << "dual histogram: " << ascending_t_string(histogram_poly(report.dual_histogram)) << '\n'
        << "bijection Q -> complement with genus g - g(Q): " << yes_no(report.bijection_holds) << '\n'
        << "(X-1)^g C(X,Y,Z) = Y^g C*(Y,X,Z) where (X-1)YZ = 1: " << yes_no(report.swapped_identity_holds) << " ("
        << swapped << '/' << report.points.size() << " points)\n"
        << "(X-1)^g C(X,Y,Z) = Y^g C*(Y+1,X-1,Z) where (X-1)YZ = 1: " << yes_no(report.shifted_identity_holds)
        << " (" << shifted << '/' << report.points.size() << " points)\n";
  }
  return report.bijection_holds && report.shifted_identity_holds ? kExitOk : kExitMismatch;
}

int run_spanning_trees(const RunConfig& cfg, std::ostream& out) {
  const RibbonGraph graph = load(cfg);
  const MultiGraph underlying = underlying_graph(graph);
  const auto trees = spanning_trees_with_activities(underlying);
  json rows = json::array();
  std::ostringstream text;
  text << "T | Activity | Weight | X^i(T)\n";
  for (const auto& tree : trees) {
    // Activities come in edge order already, since the multigraph lists edges that way.
    const std::string activity = activity_string(tree.activity);
    const MPoly weight = spanning_tree_inner_weight(graph, tree);
    const MPoly x_power = MPoly::monomial({static_cast<std::uint32_t>(tree.internally_active), 0, 0, 0});
    const std::string bits = edge_bitstring(graph, tree.edges);
    rows.push_back({{"tree", bits},
                    {"activity", activity},
                    {"weight", weight.to_string()},
                    {"internally_active", tree.internally_active},
                    {"x_factor", x_power.to_string()}});
    text << bits << " | " << activity << " | " << weight.to_string() << " | " << x_power.to_string() << '\n';
  }
  if (cfg.format == OutputFormat::Json) {
    out << json{{"spanning_trees", rows}, {"count", trees.size()}}.dump(2) << '\n';
  } else {
    out << text.str() << "spanning trees: " << trees.size() << '\n';
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bollobas-Riordan-Tutte polynomial of oriented ribbon graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string order_text;
  std::string format_text = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "graph file (JSON or text), '-' for stdin")->required();
    sub->add_option("--format", format_text, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--order", order_text, "edge order, 1-based indices lowest first, e.g. 4,2,3,1,5,6");
    sub->add_option("--cap", cfg.size_cap, "largest edge count for the state sum")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled rational points");
  };
  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"compute", "print C(X,Y,Z)", Command::Compute},
      {"quasitrees", "quasi-tree table", Command::QuasiTrees},
      {"count", "quasi-trees of each genus", Command::Count},
      {"verify", "run and cross-check all methods", Command::Verify},
      {"dual", "duality checks", Command::Dual},
      {"spanning-trees", "spanning-tree table", Command::SpanningTrees},
  };
  std::map<CLI::App*, Command> commands;
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    add_common(sub);
    if (entry.command == Command::Compute) {
      sub->add_option("--method", cfg.method, "statesum, tree, recursive, quasitree or all")
          ->check(CLI::IsMember({"statesum", "tree", "recursive", "quasitree", "all"}));
    }
    commands[sub] = entry.command;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Text;

  try {
    if (!order_text.empty()) {
      std::vector<std::size_t> order;
      std::stringstream in(order_text);
      std::string token;
      while (std::getline(in, token, ',')) order.push_back(std::stoul(token));
      cfg.edge_order = order;
    }
    switch (cfg.command) {
      case Command::Compute: return run_compute(cfg, out);
      case Command::QuasiTrees: return run_quasi_tree_table(cfg, out);
      case Command::Count: return run_count(cfg, out);
      case Command::Verify: return run_verify(cfg, out);
      case Command::Dual: return run_dual(cfg, out);
      case Command::SpanningTrees: return run_spanning_trees(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::SizeLimit ? kExitSizeCap : kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace brt::cli
