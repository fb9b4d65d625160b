#pragma once

#include <bpotts/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bpotts {

using VertexId = std::string;

// Unordered pair stored with first <= second. first == second is a self-loop.
struct InnerBond {
  VertexId first;
  VertexId second;

  InnerBond(VertexId u, VertexId v) : first(std::move(u)), second(std::move(v)) {
    if (second < first) std::swap(first, second);
  }

  bool is_loop() const { return first == second; }
  bool touches(const VertexId& v) const { return first == v || second == v; }

  friend auto operator<=>(const InnerBond&, const InnerBond&) = default;
};

// A graph with boundary: sites, the subset pinned to the wall (spin 0),
// inner bonds between sites and boundary bonds from a site to the wall.
// Both bond collections are multisets; contraction produces parallel bonds,
// self-loops and repeated boundary bonds.
struct BoundaryGraph {
  std::set<VertexId> vertices;
  std::set<VertexId> wall_vertices;
  std::multiset<InnerBond> inner_bonds;
  std::multiset<VertexId> boundary_bonds;

  std::size_t bond_count() const { return inner_bonds.size() + boundary_bonds.size(); }
  bool is_wall(const VertexId& v) const { return wall_vertices.contains(v); }

  std::vector<VertexId> free_vertices() const {
    std::vector<VertexId> out;
    std::ranges::copy_if(vertices, std::back_inserter(out),
                         [&](const VertexId& v) { return !is_wall(v); });
    return out;
  }

  std::size_t degree(const VertexId& v) const {
    std::size_t deg = boundary_bonds.count(v);
    for (const auto& b : inner_bonds) {
      if (b.first == v) ++deg;
      if (b.second == v) ++deg;
    }
    return deg;
  }

  friend bool operator==(const BoundaryGraph&, const BoundaryGraph&) = default;
};

struct Violation {
  enum class Kind { UnknownInnerEndpoint, UnknownBoundaryVertex, UnknownWallVertex };
  Kind kind;
  std::string detail;
};

inline std::vector<Violation> validate(const BoundaryGraph& g) {
  std::vector<Violation> out;
  for (const auto& v : g.wall_vertices) {
    if (!g.vertices.contains(v)) {
      out.push_back({Violation::Kind::UnknownWallVertex, "wall vertex '" + v + "' is not a vertex"});
    }
  }
  for (const auto& b : g.inner_bonds) {
    for (const auto* end : {&b.first, &b.second}) {
      if (!g.vertices.contains(*end)) {
        out.push_back({Violation::Kind::UnknownInnerEndpoint,
                       "inner bond ['" + b.first + "','" + b.second + "'] references unknown vertex '" +
                           *end + "'"});
      }
    }
  }
  for (const auto& v : g.boundary_bonds) {
    if (!g.vertices.contains(v)) {
      out.push_back({Violation::Kind::UnknownBoundaryVertex,
                     "boundary bond references unknown vertex '" + v + "'"});
    }
  }
  return out;
}

inline void require_valid(const BoundaryGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid boundary graph:";
  for (const auto& v : violations) msg += "\n  " + v.detail;
  throw GraphError(msg);
}

inline BoundaryGraph delete_inner(const BoundaryGraph& g, const InnerBond& bond) {
  auto it = g.inner_bonds.find(bond);
  if (it == g.inner_bonds.end()) {
    throw GraphError("no inner bond ['" + bond.first + "','" + bond.second + "']");
  }
  BoundaryGraph out = g;
  out.inner_bonds.erase(out.inner_bonds.find(bond));
  return out;
}

// Merges the endpoints into the lexicographically smaller id. The merged
// vertex is on the wall if either endpoint was.
inline BoundaryGraph contract_inner(const BoundaryGraph& g, const InnerBond& bond) {
  BoundaryGraph out = delete_inner(g, bond);
  if (bond.is_loop()) return out;

  const VertexId& keep = bond.first;
  const VertexId& gone = bond.second;

  std::multiset<InnerBond> rebonded;
  for (const auto& b : out.inner_bonds) {
    rebonded.emplace(b.first == gone ? keep : b.first, b.second == gone ? keep : b.second);
  }
  out.inner_bonds = std::move(rebonded);

  if (auto n = out.boundary_bonds.count(gone)) {
    out.boundary_bonds.erase(gone);
    for (std::size_t i = 0; i < n; ++i) out.boundary_bonds.insert(keep);
  }
  if (out.wall_vertices.erase(gone)) out.wall_vertices.insert(keep);
  out.vertices.erase(gone);
  return out;
}

inline BoundaryGraph delete_boundary(const BoundaryGraph& g, const VertexId& v) {
  auto it = g.boundary_bonds.find(v);
  if (it == g.boundary_bonds.end()) throw GraphError("vertex '" + v + "' has no boundary bond");
  BoundaryGraph out = g;
  out.boundary_bonds.erase(out.boundary_bonds.find(v));
  return out;
}

// Removes one boundary bond of v and pins v to the wall.
inline BoundaryGraph contract_boundary(const BoundaryGraph& g, const VertexId& v) {
  BoundaryGraph out = delete_boundary(g, v);
  out.wall_vertices.insert(v);
  return out;
}

struct StrippedGraph {
  BoundaryGraph graph;
  std::size_t free_count = 0;
  std::size_t wall_count = 0;
};

// Removes every vertex without bonds, counting free and wall vertices separately.
inline StrippedGraph strip_isolated(const BoundaryGraph& g) {
  std::set<VertexId> used(g.boundary_bonds.begin(), g.boundary_bonds.end());
  for (const auto& b : g.inner_bonds) {
    used.insert(b.first);
    used.insert(b.second);
  }
  StrippedGraph out{g, 0, 0};
  for (const auto& v : g.vertices) {
    if (used.contains(v)) continue;
    out.graph.vertices.erase(v);
    if (out.graph.wall_vertices.erase(v)) {
      ++out.wall_count;
    } else {
      ++out.free_count;
    }
  }
  return out;
}

}  // namespace bpotts
