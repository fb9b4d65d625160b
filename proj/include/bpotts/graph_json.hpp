#pragma once

// JSON form of a boundary graph:
//   {"vertices":[...], "wall_vertices":[...],
//    "inner_bonds":[["u","v"],...], "boundary_bonds":["u",...]}
// Missing keys default to empty. Vertex lists use set semantics.

#include <bpotts/boundary_graph.hpp>
#include <bpotts/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <string>

namespace bpotts {

inline BoundaryGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  auto ids = [&](const char* key) {
    std::vector<VertexId> out;
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    for (const auto& v : arr) {
      if (!v.is_string()) throw ParseError(std::string("'") + key + "' entries must be strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };

  BoundaryGraph g;
  for (auto& v : ids("vertices")) g.vertices.insert(std::move(v));
  for (auto& v : ids("wall_vertices")) g.wall_vertices.insert(std::move(v));
  for (auto& v : ids("boundary_bonds")) g.boundary_bonds.insert(std::move(v));
  if (j.contains("inner_bonds")) {
    const auto& arr = j.at("inner_bonds");
    if (!arr.is_array()) throw ParseError("'inner_bonds' must be an array");
    for (const auto& b : arr) {
      if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_string()) {
        throw ParseError("each inner bond must be a pair of vertex ids");
      }
      g.inner_bonds.emplace(b[0].get<std::string>(), b[1].get<std::string>());
    }
  }
  return g;
}

inline nlohmann::json graph_to_json(const BoundaryGraph& g) {
  nlohmann::json inner = nlohmann::json::array();
  for (const auto& b : g.inner_bonds) inner.push_back({b.first, b.second});
  return {
      {"vertices", g.vertices},
      {"wall_vertices", g.wall_vertices},
      {"inner_bonds", inner},
      {"boundary_bonds", g.boundary_bonds},
  };
}

inline BoundaryGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace bpotts
