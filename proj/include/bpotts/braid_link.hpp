#pragma once

// Tangle words, the skein map into TB_n, and the trace formula for the
// boundary Potts partition function on a rectangular lattice.

#include <bpotts/boundary_graph.hpp>
#include <bpotts/errors.hpp>
#include <bpotts/model.hpp>
#include <bpotts/tlb_algebra.hpp>

#include <string>
#include <vector>

namespace bpotts {

struct TangleLetter {
  enum class Kind { sigma, sigma_prime, e };
  Kind kind;
  unsigned index;

  static TangleLetter sigma(unsigned i) { return {Kind::sigma, i}; }
  static TangleLetter sigma_prime(unsigned i) { return {Kind::sigma_prime, i}; }
  static TangleLetter e(unsigned i) { return {Kind::e, i}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::sigma: return "s" + std::to_string(index);
      case Kind::sigma_prime: return "s'" + std::to_string(index);
      case Kind::e: return "e" + std::to_string(index);
    }
    return "?";
  }

  friend bool operator==(const TangleLetter&, const TangleLetter&) = default;
};

struct TangleWord {
  unsigned n_strands = 1;
  std::vector<TangleLetter> letters;

  TangleWord& append(const TangleWord& other) {
    if (other.n_strands != n_strands) throw IndexError("strand count mismatch in word concatenation");
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    return *this;
  }

  friend bool operator==(const TangleWord&, const TangleWord&) = default;
};

inline LoopWeights loop_weights(const ModelParams& m) { return {m.c(), m.c_prime(), m.d()}; }

// sigma_i -> beta e_i + alpha, sigma'_i -> alpha e_i + beta (alpha0/beta0 for
// i = 0), e_i -> e_i.
inline AlgebraElement phi_letter(const TangleLetter& l, const ModelParams& m, unsigned n) {
  if (l.index >= n) {
    throw IndexError("letter " + l.to_string() + " out of range for " + std::to_string(n) + " strands");
  }
  const BlobDiagram gen = TemperleyLiebB::generator_diagram(n, l.index);
  const BlobDiagram id = BlobDiagram::identity(n);
  const bool wall = l.index == 0;
  const QfScalar& alpha = wall ? m.alpha0() : m.alpha();
  const QfScalar& beta = wall ? m.beta0() : m.beta();

  AlgebraElement out(n);
  switch (l.kind) {
    case TangleLetter::Kind::sigma:
      out.add_term(gen, beta);
      out.add_term(id, alpha);
      break;
    case TangleLetter::Kind::sigma_prime:
      out.add_term(gen, alpha);
      out.add_term(id, beta);
      break;
    case TangleLetter::Kind::e:
      out.add_term(gen, QfScalar::one(m.f()));
      break;
  }
  return out;
}

// Left fold: the leftmost letter ends up at the bottom of the stack.
inline AlgebraElement evaluate_word(const TangleWord& w, const ModelParams& m) {
  const LoopWeights weights = loop_weights(m);
  AlgebraElement acc(BlobDiagram::identity(w.n_strands), QfScalar::one(m.f()));
  for (const auto& l : w.letters) acc = multiply(acc, phi_letter(l, m, w.n_strands), weights);
  return acc;
}

// sigma_0 sigma_2 ... sigma_{2m-2}: the wall bond and horizontal bonds of one row.
inline TangleWord row_layer(unsigned m_cols) {
  TangleWord w{2 * m_cols, {}};
  for (unsigned k = 0; k < m_cols; ++k) w.letters.push_back(TangleLetter::sigma(2 * k));
  return w;
}

// sigma'_1 sigma'_3 ... sigma'_{2m-1}: the vertical bonds between two rows.
inline TangleWord column_layer(unsigned m_cols) {
  TangleWord w{2 * m_cols, {}};
  for (unsigned k = 0; k < m_cols; ++k) w.letters.push_back(TangleLetter::sigma_prime(2 * k + 1));
  return w;
}

// tau_{n,m} = tau'_m (tau''_m tau'_m)^n on 2m strands.
inline TangleWord tau_word(unsigned n, unsigned m_cols) {
  if (n == 0 || m_cols == 0) throw ParameterError("tau word needs positive dimensions");
  if (2 * m_cols > kMaxStrands) throw BudgetExceeded("too many columns for the diagram basis");
  TangleWord w = row_layer(m_cols);
  for (unsigned k = 0; k < n; ++k) w.append(column_layer(m_cols)).append(row_layer(m_cols));
  return w;
}

// E_m = e_1 e_3 ... e_{2m-1}.
inline TangleWord e_block(unsigned m_cols) {
  if (m_cols == 0) throw ParameterError("E block needs at least one column");
  if (2 * m_cols > kMaxStrands) throw BudgetExceeded("too many columns for the diagram basis");
  TangleWord w{2 * m_cols, {}};
  for (unsigned k = 0; k < m_cols; ++k) w.letters.push_back(TangleLetter::e(2 * k + 1));
  return w;
}

// Braid word of a lattice with `rows` wall-bonded rows: one row layer per row
// with a column layer between consecutive rows, i.e. tau'(tau'' tau')^(rows-1).
inline TangleWord lattice_word(unsigned rows, unsigned m_cols) {
  if (rows == 0) throw ParameterError("lattice needs at least one row");
  if (rows == 1) {
    if (m_cols == 0) throw ParameterError("lattice needs at least one column");
    return row_layer(m_cols);
  }
  return tau_word(rows - 1, m_cols);
}

struct LatticeOptions {
  unsigned max_strands = 8;
};

inline void check_lattice_budget(unsigned rows, unsigned m_cols, const LatticeOptions& opts) {
  if (rows == 0 || m_cols == 0) throw ParameterError("lattice dimensions must be positive");
  if (2 * m_cols > opts.max_strands) {
    throw BudgetExceeded("lattice with " + std::to_string(m_cols) + " columns needs " +
                         std::to_string(2 * m_cols) + " strands, budget is " +
                         std::to_string(opts.max_strands));
  }
}

// W = d^m tr(E_m phi(word) E_m).
inline QfScalar potts_bracket_lattice(unsigned rows, unsigned m_cols, const ModelParams& m,
                                      const LatticeOptions& opts = {}) {
  check_lattice_budget(rows, m_cols, opts);
  TangleWord w = e_block(m_cols);
  w.append(lattice_word(rows, m_cols)).append(e_block(m_cols));
  return pow(m.d(), m_cols) * markov_trace(evaluate_word(w, m), loop_weights(m));
}

// Z = C^rows f^{rows m / 2} W.
inline QfScalar lattice_z(unsigned rows, unsigned m_cols, const ModelParams& m,
                          const LatticeOptions& opts = {}) {
  const QfScalar w = potts_bracket_lattice(rows, m_cols, m, opts);
  return pow(m.C(), rows) * pow(m.d(), static_cast<long>(rows) * m_cols) * w;
}

inline VertexId lattice_vertex(unsigned row, unsigned col) {
  return "r" + std::to_string(row) + "c" + std::to_string(col);
}

// rows x cols grid; the leftmost site of each row carries one boundary bond.
inline BoundaryGraph lattice_graph(unsigned rows, unsigned m_cols) {
  if (rows == 0 || m_cols == 0) throw ParameterError("lattice dimensions must be positive");
  BoundaryGraph g;
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < m_cols; ++c) {
      g.vertices.insert(lattice_vertex(r, c));
      if (c + 1 < m_cols) g.inner_bonds.emplace(lattice_vertex(r, c), lattice_vertex(r, c + 1));
      if (r + 1 < rows) g.inner_bonds.emplace(lattice_vertex(r, c), lattice_vertex(r + 1, c));
    }
    g.boundary_bonds.insert(lattice_vertex(r, 0));
  }
  return g;
}

}  // namespace bpotts
