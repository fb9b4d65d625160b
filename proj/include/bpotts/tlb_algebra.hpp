#pragma once

// The Temperley-Lieb algebra of Coxeter type B on a basis of blob diagrams.
//
// A diagram on n strands is a planar perfect matching of 2n boundary points.
// Points are numbered along the boundary of the rectangle, starting at the
// bottom-left and going counter-clockwise:
//
//     t_n ... t_2 t_1          positions  n ... 2n-2 2n-1
//     |               |
//     b_1 b_2 ... b_n          positions  0 1 ... n-1
//
// so b_i sits at i-1 and t_i at 2n-i. The wall lies west of strand 1, i.e. in
// the gap between positions 2n-1 and 0. An arc may carry a blob (the e_0
// decoration) only if no other arc separates it from the wall.
//
// Stacking x below y glues t_i of x to b_i of y, which in this numbering maps
// position p to 2n-1-p. The east closure used by the trace joins the same
// pairs of points, so one walk routine serves both.

#include <bpotts/errors.hpp>
#include <bpotts/qf_scalar.hpp>

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bpotts {

inline constexpr unsigned kMaxStrands = 16;

struct Arc {
  unsigned p;  // smaller endpoint
  unsigned q;
  bool blob = false;
};

class BlobDiagram {
 public:
  static BlobDiagram identity(unsigned n) {
    BlobDiagram d(n);
    for (unsigned i = 1; i <= n; ++i) d.link(bottom(i), d.top(i));
    return d;
  }

  // Checks perfect matching, planarity and west exposure of blobs.
  static BlobDiagram from_arcs(unsigned n, const std::vector<Arc>& arcs) {
    BlobDiagram d(n);
    std::uint32_t seen = 0;
    for (const auto& a : arcs) {
      if (a.p >= 2 * n || a.q >= 2 * n || a.p == a.q) throw IndexError("arc endpoint out of range");
      const std::uint32_t bits = (1u << a.p) | (1u << a.q);
      if (seen & bits) throw IndexError("point used by two arcs");
      seen |= bits;
      d.link(a.p, a.q);
      if (a.blob) d.blobs_ |= bits;
    }
    if (std::popcount(seen) != static_cast<int>(2 * n)) throw IndexError("matching is not perfect");
    if (!d.is_planar()) throw IndexError("arcs cross");
    if (!d.blobs_west_exposed()) throw IndexError("blob on an arc hidden from the wall");
    return d;
  }

  static constexpr unsigned bottom(unsigned i) { return i - 1; }
  unsigned top(unsigned i) const { return 2 * n_ - i; }

  unsigned n_strands() const { return n_; }
  unsigned point_count() const { return 2 * n_; }
  unsigned partner(unsigned p) const { return partner_[p]; }
  bool blobbed(unsigned p) const { return (blobs_ >> p) & 1u; }
  unsigned blob_count() const { return std::popcount(blobs_) / 2; }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (unsigned p = 0; p < point_count(); ++p) {
      if (partner_[p] > p) out.push_back({p, partner_[p], blobbed(p)});
    }
    return out;
  }

  bool is_planar() const {
    for (const auto& a : arcs()) {
      for (unsigned u = a.p + 1; u < a.q; ++u) {
        if (partner_[u] < a.p || partner_[u] > a.q) return false;
      }
    }
    return true;
  }

  bool blobs_west_exposed() const {
    const auto all = arcs();
    for (const auto& a : all) {
      if (!a.blob) continue;
      for (const auto& other : all) {
        if (other.p < a.p && a.q < other.q) return false;
      }
    }
    return true;
  }

  // e.g. "b1-t1* b2-b3 t2-t3"; '*' marks a blob.
  std::string to_string() const {
    std::string out;
    auto key = [&](unsigned x) { return std::pair{!is_bottom(x), strand(x)}; };
    for (auto [p, q, blob] : arcs()) {
      if (key(q) < key(p)) std::swap(p, q);
      if (!out.empty()) out += ' ';
      out += label(p) + '-' + label(q) + (blob ? "*" : "");
    }
    return out;
  }

  friend auto operator<=>(const BlobDiagram&, const BlobDiagram&) = default;

 private:
  friend class DiagramBuilder;

  explicit BlobDiagram(unsigned n) : n_(static_cast<std::uint8_t>(n)) {
    if (n == 0 || n > kMaxStrands) {
      throw IndexError("strand count must be in 1.." + std::to_string(kMaxStrands));
    }
  }

  void link(unsigned p, unsigned q) {
    partner_[p] = static_cast<std::uint8_t>(q);
    partner_[q] = static_cast<std::uint8_t>(p);
  }

  bool is_bottom(unsigned p) const { return p < n_; }
  unsigned strand(unsigned p) const { return is_bottom(p) ? p + 1 : 2 * n_ - p; }

  std::string label(unsigned p) const {
    return (is_bottom(p) ? "b" : "t") + std::to_string(strand(p));
  }

  std::uint8_t n_;
  std::array<std::uint8_t, 2 * kMaxStrands> partner_{};
  std::uint32_t blobs_ = 0;  // set on both endpoints of a blobbed arc
};

// Local factors accumulated while composing or closing diagrams.
struct LoopTally {
  unsigned blob_merges = 0;   // extra blobs absorbed into one, each worth c
  unsigned plain_loops = 0;
  unsigned blobbed_loops = 0;
  unsigned first_strand_blobbed = 0;  // closure only: blobbed loop through strand 1

  friend auto operator<=>(const LoopTally&, const LoopTally&) = default;
};

struct Composition {
  BlobDiagram diagram;
  LoopTally tally;
};

class DiagramBuilder {
 public:
  explicit DiagramBuilder(unsigned n) : d_(n) {}
  void link(unsigned p, unsigned q, bool blob) {
    d_.link(p, q);
    if (blob) d_.blobs_ |= (1u << p) | (1u << q);
  }
  BlobDiagram finish() const { return d_; }

 private:
  BlobDiagram d_;
};

// x below y.
inline Composition compose(const BlobDiagram& x, const BlobDiagram& y) {
  if (x.n_strands() != y.n_strands()) throw IndexError("strand count mismatch in product");
  const unsigned n = x.n_strands();
  const unsigned last = 2 * n - 1;
  auto glue = [last](unsigned p) { return last - p; };

  DiagramBuilder out(n);
  LoopTally tally;
  std::uint32_t middle_seen = 0;  // x top points already traversed
  std::uint32_t done = 0;

  for (unsigned start = 0; start <= last; ++start) {
    if ((done >> start) & 1u) continue;
    bool on_x = start < n;
    unsigned cur = start;
    unsigned blobs = 0;
    unsigned end;
    for (;;) {
      if (on_x) {
        blobs += x.blobbed(cur);
        unsigned q = x.partner(cur);
        if (q < n) {
          end = q;
          break;
        }
        middle_seen |= 1u << q;
        cur = glue(q);
      } else {
        blobs += y.blobbed(cur);
        unsigned q = y.partner(cur);
        if (q >= n) {
          end = q;
          break;
        }
        cur = glue(q);
        middle_seen |= 1u << cur;
      }
      on_x = !on_x;
    }
    done |= (1u << start) | (1u << end);
    if (blobs > 1) tally.blob_merges += blobs - 1;
    out.link(start, end, blobs > 0);
  }

  for (unsigned p = n; p <= last; ++p) {
    if ((middle_seen >> p) & 1u) continue;
    unsigned blobs = 0;
    unsigned cur = p;
    do {
      middle_seen |= 1u << cur;
      unsigned yp = glue(cur);
      blobs += y.blobbed(yp);
      unsigned xp = glue(y.partner(yp));
      middle_seen |= 1u << xp;
      blobs += x.blobbed(xp);
      cur = x.partner(xp);
    } while (cur != p);
    if (blobs == 0) {
      ++tally.plain_loops;
    } else {
      tally.blob_merges += blobs - 1;
      ++tally.blobbed_loops;
    }
  }

  Composition result{out.finish(), tally};
  assert(result.diagram.is_planar() && result.diagram.blobs_west_exposed());
  return result;
}

// Loops formed by joining t_i to b_i around the east side.
inline LoopTally east_closure(const BlobDiagram& x) {
  const unsigned last = x.point_count() - 1;
  LoopTally tally;
  std::uint32_t seen = 0;
  for (unsigned start = 0; start <= last; ++start) {
    if ((seen >> start) & 1u) continue;
    unsigned blobs = 0;
    unsigned cur = start;
    do {
      unsigned q = x.partner(cur);
      seen |= (1u << cur) | (1u << q);
      blobs += x.blobbed(cur);
      cur = last - q;
    } while (cur != start);
    if (blobs == 0) {
      ++tally.plain_loops;
    } else {
      tally.blob_merges += blobs - 1;
      ++(start == 0 ? tally.first_strand_blobbed : tally.blobbed_loops);
    }
  }
  return tally;
}

// Algebra parameters: e_0^2 = c e_0, e_i^2 = d e_i, e_1 e_0 e_1 = c' e_1.
struct LoopWeights {
  QfScalar c;
  QfScalar c_prime;
  QfScalar d;

  // Inside a product: a blob merge costs c, a closed loop d or c'.
  QfScalar product_factor(const LoopTally& t) const {
    return pow(c, t.blob_merges) * pow(d, t.plain_loops) * pow(c_prime, t.blobbed_loops);
  }

  // Closing strands east to west, every loop except the last one closed is an
  // ordinary internal loop. The last one runs through strand 1 and is worth c
  // when blobbed, so that tr(e_0) = c/d.
  QfScalar closure_factor(const LoopTally& t) const {
    return pow(c, t.blob_merges + t.first_strand_blobbed) * pow(d, t.plain_loops) * pow(c_prime, t.blobbed_loops);
  }
};

inline std::pair<QfScalar, BlobDiagram> multiply_diagrams(const BlobDiagram& x, const BlobDiagram& y,
                                                          const LoopWeights& w) {
  auto [diagram, tally] = compose(x, y);
  return {w.product_factor(tally), diagram};
}

// Finite linear combination of diagrams with a common strand count.
class AlgebraElement {
 public:
  using Terms = std::map<BlobDiagram, QfScalar>;

  explicit AlgebraElement(unsigned n) : n_(n) {}
  AlgebraElement(const BlobDiagram& d, QfScalar coeff) : n_(d.n_strands()) {
    add_term(d, std::move(coeff));
  }

  unsigned n_strands() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const BlobDiagram& d, const QfScalar& coeff) {
    if (d.n_strands() != n_) throw IndexError("strand count mismatch in sum");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Coefficient of d, or nullptr when d is not in the support.
  const QfScalar* coefficient(const BlobDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? nullptr : &it->second;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, k] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + k.to_string() + ")[" + d.to_string() + "]";
    }
    return out;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) { return os << x.to_string(); }

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) {
    if (x.n_ != y.n_) throw IndexError("strand count mismatch in sum");
    for (const auto& [d, k] : y.terms_) x.add_term(d, k);
    return x;
  }

  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) {
    if (x.n_ != y.n_) throw IndexError("strand count mismatch in difference");
    for (const auto& [d, k] : y.terms_) x.add_term(d, -k);
    return x;
  }

 private:
  unsigned n_;
  Terms terms_;
};

inline AlgebraElement scale(const QfScalar& k, const AlgebraElement& x) {
  AlgebraElement out(x.n_strands());
  for (const auto& [d, coeff] : x.terms()) out.add_term(d, k * coeff);
  return out;
}

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const LoopWeights& w) {
  if (x.n_strands() != y.n_strands()) throw IndexError("strand count mismatch in product");
  std::map<LoopTally, QfScalar> factors;
  AlgebraElement out(x.n_strands());
  for (const auto& [dx, kx] : x.terms()) {
    for (const auto& [dy, ky] : y.terms()) {
      auto [diagram, tally] = compose(dx, dy);
      auto it = factors.find(tally);
      if (it == factors.end()) it = factors.emplace(tally, w.product_factor(tally)).first;
      out.add_term(diagram, kx * ky * it->second);
    }
  }
  return out;
}

// tr(1) = 1, tr(e_0) = c/d, tr(a e_{n} b) = tr(ab)/d, realized as east
// closure normalized by d^{-n}.
inline QfScalar markov_trace(const BlobDiagram& x, const LoopWeights& w) {
  return w.closure_factor(east_closure(x)) * pow(w.d, -static_cast<long>(x.n_strands()));
}

inline QfScalar markov_trace(const AlgebraElement& x, const LoopWeights& w) {
  auto total = QfScalar::zero(w.d.f());
  for (const auto& [d, k] : x.terms()) total += k * markov_trace(d, w);
  return total;
}

// Generators of TB_n as algebra elements over Q(sqrt f).
class TemperleyLiebB {
 public:
  TemperleyLiebB(unsigned n, LoopWeights w) : n_(n), w_(std::move(w)) {
    if (n == 0 || n > kMaxStrands) {
      throw IndexError("strand count must be in 1.." + std::to_string(kMaxStrands));
    }
  }

  unsigned n_strands() const { return n_; }
  const LoopWeights& weights() const { return w_; }
  std::uint64_t f() const { return w_.d.f(); }

  QfScalar scalar(long v) const { return QfScalar::rational(Rational(v), f()); }

  AlgebraElement zero() const { return AlgebraElement(n_); }
  AlgebraElement one() const { return {BlobDiagram::identity(n_), scalar(1)}; }

  // e_0 blobs strand 1; e_i (i >= 1) is the cup-cap on strands i, i+1.
  static BlobDiagram generator_diagram(unsigned n, unsigned i) {
    if (i >= n) {
      throw IndexError("generator e_" + std::to_string(i) + " needs at least " + std::to_string(i + 1) +
                       " strands, have " + std::to_string(n));
    }
    DiagramBuilder b(n);
    auto top = [n](unsigned k) { return 2 * n - k; };
    for (unsigned k = 1; k <= n; ++k) {
      if (i >= 1 && (k == i || k == i + 1)) continue;
      b.link(BlobDiagram::bottom(k), top(k), i == 0 && k == 1);
    }
    if (i >= 1) {
      b.link(BlobDiagram::bottom(i), BlobDiagram::bottom(i + 1), false);
      b.link(top(i + 1), top(i), false);
    }
    return b.finish();
  }

  AlgebraElement e(unsigned i) const { return {generator_diagram(n_, i), scalar(1)}; }

  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const { return multiply(x, y, w_); }

  // Product of generators e_{i_1} e_{i_2} ... (leftmost at the bottom).
  AlgebraElement word(const std::vector<unsigned>& indices) const {
    AlgebraElement acc = one();
    for (unsigned i : indices) acc = mul(acc, e(i));
    return acc;
  }

  QfScalar trace(const AlgebraElement& x) const { return markov_trace(x, w_); }

 private:
  unsigned n_;
  LoopWeights w_;
};

}  // namespace bpotts
