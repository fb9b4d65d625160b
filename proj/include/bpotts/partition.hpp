#pragma once

// Reference evaluations of the boundary Potts partition function
//
//   Z_G = sum_S  prod_{(i,j) in B1} (1 + delta(S_i,S_j) B)  prod_{i in B0} (C + delta(0,S_i) D)
//
// by direct enumeration of spin states and by deletion-contraction.

#include <bpotts/boundary_graph.hpp>
#include <bpotts/errors.hpp>
#include <bpotts/model.hpp>
#include <bpotts/qf_scalar.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace bpotts {

using SpinState = std::map<VertexId, std::uint64_t>;

inline QfScalar state_weight(const BoundaryGraph& g, const ModelParams& m, const SpinState& s) {
  auto spin = [&](const VertexId& v) {
    auto it = s.find(v);
    if (it == s.end()) throw GraphError("spin state has no value for vertex '" + v + "'");
    if (it->second >= m.f()) throw GraphError("spin of '" + v + "' is outside {0..f-1}");
    if (g.is_wall(v) && it->second != 0) throw GraphError("wall vertex '" + v + "' must have spin 0");
    return it->second;
  };
  for (const auto& v : g.vertices) spin(v);

  auto w = QfScalar::one(m.f());
  const auto one = QfScalar::one(m.f());
  for (const auto& b : g.inner_bonds) {
    if (spin(b.first) == spin(b.second)) w *= one + m.B();
  }
  for (const auto& v : g.boundary_bonds) {
    w *= spin(v) == 0 ? m.C() + m.D() : m.C();
  }
  return w;
}

struct EnumerationOptions {
  std::uint64_t budget = 2'000'000;  // maximum number of spin states
  unsigned workers = 1;
};

// Number of states f^{|V \ V0|}, or nullopt if it exceeds `limit`.
inline std::optional<std::uint64_t> state_count(const BoundaryGraph& g, std::uint64_t f,
                                                std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0, k = g.vertices.size() - g.wall_vertices.size(); i < k; ++i) {
    if (f != 0 && total > limit / f) return std::nullopt;
    total *= f;
  }
  if (total > limit) return std::nullopt;
  return total;
}

namespace detail {

// Bond endpoints as indices into the free-spin vector; -1 is a wall vertex.
struct IndexedGraph {
  std::size_t free_count = 0;
  std::vector<std::pair<int, int>> inner;
  std::vector<int> boundary;
};

inline IndexedGraph index_graph(const BoundaryGraph& g) {
  IndexedGraph out;
  std::map<VertexId, int> slot;
  for (const auto& v : g.vertices) {
    slot[v] = g.is_wall(v) ? -1 : static_cast<int>(out.free_count++);
  }
  for (const auto& b : g.inner_bonds) out.inner.emplace_back(slot.at(b.first), slot.at(b.second));
  for (const auto& v : g.boundary_bonds) out.boundary.push_back(slot.at(v));
  return out;
}

// Histogram over (equal inner bonds, boundary bonds with nonzero spin) for
// the state indices [begin, end). Every state weight is (1+B)^a C^b.
inline std::vector<std::uint64_t> tally_states(const IndexedGraph& ig, std::uint64_t f,
                                               std::uint64_t begin, std::uint64_t end) {
  const std::size_t nb = ig.boundary.size() + 1;
  std::vector<std::uint64_t> hist((ig.inner.size() + 1) * nb, 0);
  std::vector<std::uint64_t> spins(ig.free_count, 0);
  {
    std::uint64_t idx = begin;
    for (auto& s : spins) {
      s = idx % f;
      idx /= f;
    }
  }
  auto value = [&](int slot) { return slot < 0 ? std::uint64_t{0} : spins[slot]; };
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::size_t equal = 0;
    for (const auto& [u, v] : ig.inner) equal += value(u) == value(v);
    std::size_t off_ground = 0;
    for (int u : ig.boundary) off_ground += value(u) != 0;
    ++hist[equal * nb + off_ground];
    for (auto& s : spins) {
      if (++s < f) break;
      s = 0;
    }
  }
  return hist;
}

}  // namespace detail

inline QfScalar brute_force_z(const BoundaryGraph& g, const ModelParams& m,
                              const EnumerationOptions& opts = {}) {
  require_valid(g);
  const auto total = state_count(g, m.f(), opts.budget);
  if (!total) {
    throw BudgetExceeded("enumeration needs f^" +
                         std::to_string(g.vertices.size() - g.wall_vertices.size()) +
                         " states, budget is " + std::to_string(opts.budget));
  }
  const auto ig = detail::index_graph(g);
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(*total)));

  std::vector<std::vector<std::uint64_t>> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = *total * w / workers;
      const std::uint64_t end = *total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { partial[w] = detail::tally_states(ig, m.f(), begin, end); });
    }
  }
  std::vector<std::uint64_t> hist(partial.front().size(), 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += p[i];
  }

  const std::size_t nb = ig.boundary.size() + 1;
  const Rational one_plus_b = Rational(1) + m.B_rational();
  std::vector<Rational> c_pow(nb, Rational(1));
  for (std::size_t b = 1; b < nb; ++b) c_pow[b] = c_pow[b - 1] * m.C_rational();

  Rational z(0);
  Rational bond_pow(1);
  for (std::size_t a = 0; a <= ig.inner.size(); ++a, bond_pow *= one_plus_b) {
    Rational row(0);
    for (std::size_t b = 0; b < nb; ++b) {
      if (auto n = hist[a * nb + b]) row += Rational(n) * c_pow[b];
    }
    z += row * bond_pow;
  }
  return QfScalar::rational(z, m.f());
}

enum class BondSelection {
  boundary_first,  // a boundary bond if any, else an inner bond at the lowest-id vertex
  inner_first,
  seeded_random,
};

struct RecursionOptions {
  BondSelection selection = BondSelection::boundary_first;
  std::uint64_t seed = 0;  // for seeded_random
  bool memoize = false;
};

namespace detail {

inline std::string encode(const BoundaryGraph& g) {
  std::string key;
  for (const auto& v : g.vertices) key += (g.is_wall(v) ? "w:" : "v:") + v + ';';
  key += '|';
  for (const auto& b : g.inner_bonds) key += b.first + ',' + b.second + ';';
  key += '|';
  for (const auto& v : g.boundary_bonds) key += v + ';';
  return key;
}

class DeletionContraction {
 public:
  DeletionContraction(const ModelParams& m, const RecursionOptions& opts)
      : opts_(opts),
        f_(m.f()),
        B_(m.B_rational()),
        C_(m.C_rational()),
        D_(Rational(1) - m.C_rational()),
        rng_(opts.seed) {}

  Rational evaluate(BoundaryGraph g) {
    Rational factor(1);

    // Peel off everything that contributes a constant factor.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = g.inner_bonds.begin(); it != g.inner_bonds.end();) {
        if (it->is_loop()) {
          factor *= Rational(1) + B_;
          it = g.inner_bonds.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
      for (auto it = g.boundary_bonds.begin(); it != g.boundary_bonds.end();) {
        if (g.is_wall(*it)) {
          factor *= C_ + D_;
          it = g.boundary_bonds.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
      auto stripped = strip_isolated(g);
      if (stripped.free_count + stripped.wall_count > 0) {
        for (std::size_t i = 0; i < stripped.free_count; ++i) factor *= Rational(f_);
        g = std::move(stripped.graph);
        changed = true;
      }
    }
    if (g.bond_count() == 0) return factor;

    std::string key;
    if (opts_.memoize) {
      key = encode(g);
      if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;
    }

    Rational z = expand(g);
    if (opts_.memoize) memo_.emplace(std::move(key), z);
    return factor * z;
  }

 private:
  Rational expand_boundary(const BoundaryGraph& g, const VertexId& v) {
    return C_ * evaluate(delete_boundary(g, v)) + D_ * evaluate(contract_boundary(g, v));
  }

  Rational expand_inner(const BoundaryGraph& g, const InnerBond& b) {
    return evaluate(delete_inner(g, b)) + B_ * evaluate(contract_inner(g, b));
  }

  Rational expand(const BoundaryGraph& g) {
    switch (opts_.selection) {
      case BondSelection::boundary_first:
        if (!g.boundary_bonds.empty()) return expand_boundary(g, *g.boundary_bonds.begin());
        return expand_inner(g, *g.inner_bonds.begin());
      case BondSelection::inner_first:
        if (!g.inner_bonds.empty()) return expand_inner(g, *std::prev(g.inner_bonds.end()));
        return expand_boundary(g, *std::prev(g.boundary_bonds.end()));
      case BondSelection::seeded_random: {
        std::uniform_int_distribution<std::size_t> pick(0, g.bond_count() - 1);
        std::size_t k = pick(rng_);
        if (k < g.inner_bonds.size()) return expand_inner(g, *std::next(g.inner_bonds.begin(), k));
        return expand_boundary(g, *std::next(g.boundary_bonds.begin(), k - g.inner_bonds.size()));
      }
    }
    throw Error("unknown bond selection");
  }

  RecursionOptions opts_;
  std::uint64_t f_;
  Rational B_, C_, D_;
  std::mt19937_64 rng_;
  std::map<std::string, Rational> memo_;
};

}  // namespace detail

inline QfScalar deletion_contraction_z(const BoundaryGraph& g, const ModelParams& m,
                                       const RecursionOptions& opts = {}) {
  require_valid(g);
  detail::DeletionContraction dc(m, opts);
  return QfScalar::rational(dc.evaluate(g), m.f());
}

}  // namespace bpotts
