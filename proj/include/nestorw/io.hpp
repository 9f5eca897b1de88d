#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nestorw/errors.hpp"
#include "nestorw/hypergraph.hpp"

namespace nestorw {

namespace detail {

inline OrderedHypergraph assemble(const std::vector<std::string>& vertices,
                                  const std::vector<std::vector<std::string>>& edges, bool atomize,
                                  const std::string& where) {
  if (vertices.empty()) throw parse_error(where + ": no vertices declared");
  if (static_cast<int>(vertices.size()) > max_vertices) throw capacity_error(where + ": too many vertices");
  std::map<std::string, VertexId> id;
  for (const std::string& v : vertices)
    if (!id.emplace(v, static_cast<VertexId>(id.size()) + 1).second)
      throw parse_error(where + ": duplicate vertex '" + v + "'");
  std::vector<VertexSet> sets;
  for (const auto& e : edges) {
    if (e.empty()) throw parse_error(where + ": empty hyperedge");
    VertexSet s;
    for (const std::string& v : e) {
      auto it = id.find(v);
      if (it == id.end()) throw parse_error(where + ": hyperedge uses undeclared vertex '" + v + "'");
      s.insert(it->second);
    }
    sets.push_back(s);
  }
  const int n = static_cast<int>(vertices.size());
  if (atomize) return OrderedHypergraph::atomized(n, std::move(sets), vertices);
  return OrderedHypergraph(n, std::move(sets), vertices);
}

}  // namespace detail

/// `vertices: a b c` then `edge: a b` lines; `#` starts a comment.
inline OrderedHypergraph parse_hg(std::string_view text, bool atomize = false) {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
  bool declared = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);
    if (key == "vertices:") {
      if (declared) throw parse_error(where + ": vertices declared twice");
      declared = true;
      vertices = std::move(rest);
    } else if (key == "edge:") {
      if (!declared) throw parse_error(where + ": edge before vertices");
      edges.push_back(std::move(rest));
    } else {
      throw parse_error(where + ": expected 'vertices:' or 'edge:'");
    }
  }
  if (!declared) throw parse_error("missing 'vertices:' line");
  return detail::assemble(vertices, edges, atomize, "hypergraph");
}

/// `{"vertices":[...],"hyperedges":[[...],...]}`; vertices may be strings or numbers.
inline OrderedHypergraph parse_hypergraph_json(std::string_view text, bool atomize = false) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  auto name = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw parse_error("vertex names must be strings or integers");
  };
  if (!j.is_object() || !j.contains("vertices") || !j.contains("hyperedges") || !j["vertices"].is_array() ||
      !j["hyperedges"].is_array())
    throw parse_error("JSON hypergraph needs arrays 'vertices' and 'hyperedges'");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(name(v));
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : j["hyperedges"]) {
    if (!e.is_array()) throw parse_error("each hyperedge must be an array");
    std::vector<std::string> edge;
    for (const auto& v : e) edge.push_back(name(v));
    edges.push_back(std::move(edge));
  }
  return detail::assemble(vertices, edges, atomize, "hypergraph");
}

/// Dispatches on the first non-blank character: `{` means JSON.
inline OrderedHypergraph parse_hypergraph(std::string_view text, bool atomize = false) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_hypergraph_json(text, atomize);
  return parse_hg(text, atomize);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline OrderedHypergraph load_hypergraph(const std::string& path, bool atomize = false) {
  return parse_hypergraph(read_file(path), atomize);
}

inline std::string to_hg(const OrderedHypergraph& h) {
  std::string s = "vertices:";
  for (const std::string& l : h.labels()) s += ' ' + l;
  s += '\n';
  for (VertexSet e : h.edges()) {
    s += "edge:";
    for (VertexId v : e.elements()) s += ' ' + h.label(v);
    s += '\n';
  }
  return s;
}

inline nlohmann::json to_json(const OrderedHypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (VertexSet e : h.edges()) {
    nlohmann::json edge = nlohmann::json::array();
    for (VertexId v : e.elements()) edge.push_back(h.label(v));
    edges.push_back(edge);
  }
  return {{"vertices", h.labels()}, {"hyperedges", edges}};
}

/// Quoted DOT identifier.
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace nestorw
