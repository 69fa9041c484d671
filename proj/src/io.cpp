#include "brt/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "brt/error.hpp"

namespace brt {

namespace {

std::vector<std::vector<long long>> parse_parenthesized(std::string_view text) {
  std::vector<std::vector<long long>> groups;
  std::vector<long long>* current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (current != nullptr) throw Error(ErrorCode::Parse, "nested '('");
      current = &groups.emplace_back();
      ++i;
    } else if (c == ')') {
      if (current == nullptr) throw Error(ErrorCode::Parse, "unmatched ')'");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (current == nullptr) throw Error(ErrorCode::Parse, "label outside parentheses");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      current->push_back(std::stoll(std::string(text.substr(i, j - i))));
      i = j;
    } else {
      throw Error(ErrorCode::Parse, std::string("unexpected character '") + c + "'");
    }
  }
  if (current != nullptr) throw Error(ErrorCode::Parse, "unterminated '('");
  return groups;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = token.find_last_not_of(" \t");
    const std::string trimmed = token.substr(first, last - first + 1);
    if (trimmed.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::Parse, "bad edge index '" + trimmed + "'");
    }
    out.push_back(std::stoul(trimmed));
  }
  return out;
}

Label to_label(long long value) {
  if (value < 1 || value > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::Parse, "half-edge label " + std::to_string(value) + " out of range");
  }
  return static_cast<Label>(value);
}

GraphDocument from_json(const nlohmann::json& j) {
  GraphDocument doc;
  try {
    for (const auto& cycle : j.at("sigma0")) {
      Cycle c;
      for (const auto& label : cycle) c.push_back(to_label(label.get<long long>()));
      doc.sigma0.push_back(std::move(c));
    }
    for (const auto& pair : j.at("sigma1")) {
      if (pair.size() != 2) throw Error(ErrorCode::Parse, "sigma1 entries must have two labels");
      doc.sigma1.push_back({to_label(pair[0].get<long long>()), to_label(pair[1].get<long long>())});
    }
    if (j.contains("edge_order")) doc.edge_order = j.at("edge_order").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return doc;
}

GraphDocument from_text(std::string_view text) {
  GraphDocument doc;
  bool have_sigma0 = false;
  bool have_sigma1 = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "expected 'key: value' in '" + line + "'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string_view value = std::string_view(line).substr(colon + 1);
    if (key == "sigma0") {
      for (const auto& group : parse_parenthesized(value)) {
        Cycle c;
        for (long long label : group) c.push_back(to_label(label));
        doc.sigma0.push_back(std::move(c));
      }
      have_sigma0 = true;
    } else if (key == "sigma1") {
      for (const auto& group : parse_parenthesized(value)) {
        if (group.size() != 2) throw Error(ErrorCode::Parse, "sigma1 cycles must be transpositions");
        doc.sigma1.push_back({to_label(group[0]), to_label(group[1])});
      }
      have_sigma1 = true;
    } else if (key == "edge_order") {
      doc.edge_order = parse_index_list(value);
    } else {
      throw Error(ErrorCode::Parse, "unknown key '" + key + "'");
    }
  }
  if (!have_sigma0 || !have_sigma1) throw Error(ErrorCode::Parse, "both sigma0 and sigma1 are required");
  return doc;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    return from_json(j);
  }
  return from_text(text);
}

GraphDocument read_graph_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_document(buffer.str());
}

RibbonGraph apply_edge_order(const RibbonGraph& graph, const std::vector<std::size_t>& one_based) {
  std::vector<EdgeIndex> order;
  for (std::size_t e : one_based) {
    if (e < 1 || e > graph.edge_count()) {
      throw Error(ErrorCode::InvalidArgument, "edge index " + std::to_string(e) + " out of range");
    }
    order.push_back(e - 1);
  }
  return graph.with_edge_order(std::move(order));
}

RibbonGraph to_ribbon_graph(const GraphDocument& doc) {
  RibbonGraph graph = build_ribbon_graph(doc.sigma0, doc.sigma1);
  return doc.edge_order ? apply_edge_order(graph, *doc.edge_order) : graph;
}

nlohmann::json graph_to_json(const RibbonGraph& graph) {
  nlohmann::json j;
  j["sigma0"] = graph.vertices();
  j["sigma1"] = graph.edges();
  j["sigma2"] = graph.faces();
  std::vector<std::size_t> order;
  for (EdgeIndex e : graph.edge_order()) order.push_back(e + 1);
  j["edge_order"] = order;
  const GraphCounts c = graph_counts(graph);
  j["counts"] = {{"v", c.v}, {"e", c.e}, {"f", c.f}, {"k", c.k}, {"g", c.g}, {"n", c.n}};
  return j;
}

nlohmann::json poly_to_json(const MPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json term;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      term["coeff"] = static_cast<std::int64_t>(c);
    } else {
      term["coeff"] = c.str();
    }
    term["x"] = m.x;
    term["y"] = m.y;
    term["z"] = m.z;
    term["t"] = m.t;
    terms.push_back(std::move(term));
  }
  return terms;
}

MPoly poly_from_json(const nlohmann::json& terms) {
  MPoly p;
  try {
    for (const auto& term : terms) {
      const auto& coeff = term.at("coeff");
      const BigInt c = coeff.is_string() ? BigInt(coeff.get<std::string>()) : BigInt(coeff.get<std::int64_t>());
      p.add_term({term.value("x", 0U), term.value("y", 0U), term.value("z", 0U), term.value("t", 0U)}, c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return p;
}

std::string cycles_string(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

}  // namespace brt
