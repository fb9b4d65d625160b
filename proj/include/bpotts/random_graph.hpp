#pragma once

#include <bpotts/boundary_graph.hpp>
#include <bpotts/qf_scalar.hpp>

#include <random>
#include <string>

namespace bpotts {

struct RandomGraphShape {
  unsigned max_vertices = 6;
  unsigned max_inner_bonds = 8;
  unsigned max_boundary_bonds = 4;
  double wall_probability = 0.2;
  bool allow_loops = true;
};

// Small random boundary graph with ids "v0".."v{k-1}". Parallel bonds,
// self-loops and repeated boundary bonds all occur.
template <class Rng>
BoundaryGraph random_boundary_graph(Rng& rng, const RandomGraphShape& shape = {}) {
  std::uniform_int_distribution<unsigned> vertex_count(1, shape.max_vertices);
  const unsigned nv = vertex_count(rng);
  std::uniform_int_distribution<unsigned> pick(0, nv - 1);
  std::bernoulli_distribution on_wall(shape.wall_probability);

  BoundaryGraph g;
  for (unsigned i = 0; i < nv; ++i) {
    const VertexId id = "v" + std::to_string(i);
    g.vertices.insert(id);
    if (on_wall(rng)) g.wall_vertices.insert(id);
  }
  const unsigned inner = std::uniform_int_distribution<unsigned>(0, shape.max_inner_bonds)(rng);
  for (unsigned k = 0; k < inner; ++k) {
    unsigned u = pick(rng);
    unsigned v = pick(rng);
    if (u == v && !shape.allow_loops) continue;
    g.inner_bonds.emplace("v" + std::to_string(u), "v" + std::to_string(v));
  }
  const unsigned boundary = std::uniform_int_distribution<unsigned>(0, shape.max_boundary_bonds)(rng);
  for (unsigned k = 0; k < boundary; ++k) g.boundary_bonds.insert("v" + std::to_string(pick(rng)));
  return g;
}

// p/q with p uniform in [lo_num, hi_num] and q uniform in [1, max_den].
template <class Rng>
Rational random_rational(Rng& rng, long lo_num, long hi_num, long max_den) {
  std::uniform_int_distribution<long> num(lo_num, hi_num);
  std::uniform_int_distribution<long> den(1, max_den);
  const long p = num(rng);
  return Rational(p, den(rng));
}

}  // namespace bpotts
