// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <bpotts/braid_link.hpp>
#include <bpotts/partition.hpp>
#include <bpotts/random_graph.hpp>
#include <bpotts/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace bpotts;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && s > limit_seconds) {
    o.passed = false;
    o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!o.passed) ++failures;
  std::printf("[%s] %d %s (%.2f s%s%s)\n", o.passed ? "PASS" : "FAIL", id, title, s, o.note.empty() ? "" : "; ",
              o.note.c_str());
  std::fflush(stdout);
}

const Rational kB(-1, 2);
const Rational kC(1, 3);

std::string size_label(unsigned r, unsigned c, std::uint64_t f) {
  return std::to_string(r) + "x" + std::to_string(c) + " f=" + std::to_string(f);
}

}  // namespace

int main() {
  criterion(1, "three-way exact agreement on lattices up to 3x3", 60, [] {
    Outcome o;
    unsigned cases = 0;
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned c = 1; c <= 3; ++c) {
        for (std::uint64_t f : {2u, 3u}) {
          for (long g : {1L, 2L}) {
            const auto m = make_model(f, kB, kC, Rational(g));
            const auto graph = lattice_graph(r, c);
            const auto brute = brute_force_z(graph, m);
            const auto dc = deletion_contraction_z(graph, m);
            const auto trace = lattice_z(r, c, m);
            ++cases;
            if (!(brute == dc && dc == trace) && o.passed) {
              o = {false, size_label(r, c, f) + " gauge " + std::to_string(g) + ": " + brute.to_string() + " / " +
                              dc.to_string() + " / " + trace.to_string()};
            }
          }
        }
      }
    }
    if (o.passed) o.note = std::to_string(cases) + " cases";
    return o;
  });

  criterion(2, "algebra relations for n <= 6 at 3 random parameter points", 5, [] {
    std::mt19937_64 rng(2);
    auto nonzero = [&](std::uint64_t f) {
      for (;;) {
        QfScalar x(random_rational(rng, -6, 6, 5), random_rational(rng, -6, 6, 5), f);
        if (!x.is_zero()) return x;
      }
    };
    unsigned checked = 0;
    for (std::uint64_t f : {2u, 3u, 5u}) {
      const LoopWeights w{nonzero(f), nonzero(f), nonzero(f)};
      for (unsigned n = 1; n <= 6; ++n) {
        const auto bad = tb_relation_failures(TemperleyLiebB(n, w));
        if (!bad.empty()) return Outcome{false, bad.front()};
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " algebras"};
  });

  criterion(3, "Markov trace anchors and 200 random word pairs", 10, [] {
    std::mt19937_64 rng(3);
    for (std::uint64_t f : {2u, 3u}) {
      const TemperleyLiebB alg(3, loop_weights(make_model(f, kB, kC)));
      if (!(alg.trace(alg.one()) == QfScalar::one(f))) return Outcome{false, "tr(1)"};
      if (!(alg.trace(alg.e(0)) == alg.weights().c / alg.weights().d)) return Outcome{false, "tr(e0)"};
    }
    const unsigned pairs = 240;
    for (unsigned k = 0; k < pairs; ++k) {
      const unsigned n = 2 + k % 4;
      const TemperleyLiebB alg(n, loop_weights(make_model(2 + k % 2, kB, kC, Rational(1 + k % 3))));
      const auto a = alg.word(random_generator_word(rng, n - 2, 5));
      const auto b = alg.word(random_generator_word(rng, n - 2, 5));
      if (!(alg.trace(alg.mul(alg.mul(a, alg.e(n - 1)), b)) == alg.trace(alg.mul(a, b)) / alg.weights().d)) {
        return Outcome{false, "pair #" + std::to_string(k) + " at n=" + std::to_string(n)};
      }
    }
    return Outcome{true, std::to_string(pairs) + " pairs"};
  });

  criterion(4, "C=1 and f=1 reductions on random graphs", 10, [] {
    std::mt19937_64 rng(4);
    const RandomGraphShape shape{8, 10, 4, 0.2, true};
    const unsigned graphs = 25;
    for (unsigned k = 0; k < graphs; ++k) {
      const auto g = random_boundary_graph(rng, shape);
      auto stripped = g;
      stripped.boundary_bonds.clear();
      const auto m1 = make_model(2, kB, Rational(1));
      const auto expected_c = brute_force_z(stripped, m1);
      if (!(brute_force_z(g, m1) == expected_c && deletion_contraction_z(g, m1) == expected_c)) {
        return Outcome{false, "C=1 on graph #" + std::to_string(k)};
      }
      const auto mf = make_model(1, kB, kC);
      const auto expected_f = pow(QfScalar::one(1) + mf.B(), static_cast<long>(g.inner_bonds.size()));
      if (!(brute_force_z(g, mf) == expected_f && deletion_contraction_z(g, mf) == expected_f)) {
        return Outcome{false, "f=1 on graph #" + std::to_string(k)};
      }
    }
    return Outcome{true, std::to_string(graphs) + " graphs"};
  });

  criterion(5, "sqrt(f) component of the lattice value vanishes", 0, [] {
    for (unsigned r = 1; r <= 3; ++r) {
      for (unsigned c = 1; c <= 3; ++c) {
        for (std::uint64_t f : {2u, 3u}) {
          for (long g : {1L, 2L}) {
            const auto z = lattice_z(r, c, make_model(f, kB, kC, Rational(g)));
            if (!z.is_rational()) return Outcome{false, size_label(r, c, f) + " gives " + z.to_string()};
          }
        }
      }
    }
    return Outcome{true, {}};
  });

  criterion(6, "trace vs direct summation timing (informational)", 0, [] {
    // Largest lattice within the default budgets: 3 rows, 4 columns (8 strands).
    const unsigned rows = 3, cols = 4;
    const auto m = make_model(2, kB, kC);
    const auto graph = lattice_graph(rows, cols);
    auto seconds = [](auto&& fn) {
      const auto t0 = std::chrono::steady_clock::now();
      auto v = fn();
      return std::pair{std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), v};
    };
    const auto [t_brute, brute] = seconds([&] { return brute_force_z(graph, m); });
    const auto [t_trace, trace] = seconds([&] { return lattice_z(rows, cols, m); });
    if (!(brute == trace)) return Outcome{false, "values differ on 3x4"};
    char buf[160];
    std::snprintf(buf, sizeof buf, "3x4 f=2: trace %.4f s, brute %.4f s, ratio %.1f; trace %s", t_trace, t_brute,
                  t_trace / t_brute, t_trace > t_brute ? "slower" : "faster");
    return Outcome{true, buf};
  });

  criterion(7, "parallel enumeration is deterministic", 0, [] {
    std::mt19937_64 rng(7);
    const RandomGraphShape shape{8, 12, 4, 0.2, true};
    for (unsigned k = 0; k < 10; ++k) {
      const auto g = random_boundary_graph(rng, shape);
      const auto m = make_model(3, kB, kC);
      const auto one = brute_force_z(g, m, {2'000'000, 1});
      for (unsigned workers : {2u, 3u, 8u}) {
        if (!(brute_force_z(g, m, {2'000'000, workers}) == one)) {
          return Outcome{false, "graph #" + std::to_string(k) + " with " + std::to_string(workers) + " workers"};
        }
      }
    }
    return Outcome{true, "10 graphs, 1 vs 2/3/8 workers"};
  });

  return failures == 0 ? 0 : 1;
}
