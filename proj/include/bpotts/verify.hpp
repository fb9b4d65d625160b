#pragma once

// Cross-method invariant suite behind `bpotts verify`.

#include <bpotts/braid_link.hpp>
#include <bpotts/model.hpp>
#include <bpotts/partition.hpp>
#include <bpotts/random_graph.hpp>
#include <bpotts/tlb_algebra.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bpotts {

struct VerifyConfig {
  unsigned max_rows = 3;
  unsigned max_cols = 3;
  std::vector<std::uint64_t> f_list{2, 3};
  Rational B{-1, 2};
  Rational C{1, 3};
  std::uint64_t seed = 1;
  unsigned random_graphs = 20;
  unsigned markov_pairs = 60;
  unsigned max_algebra_strands = 6;
  bool mutate_beta = false;  // negative control: doubles beta on the trace path
};

struct CheckResult {
  std::string name;
  bool passed = true;
  unsigned cases = 0;
  std::string detail;
  double seconds = 0.0;
};

struct LatticeCounterexample {
  unsigned rows = 0;
  unsigned cols = 0;
  std::uint64_t f = 0;
  Rational c_gauge;
  std::string brute;
  std::string dc;
  std::string trace;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::optional<LatticeCounterexample> counterexample;

  bool passed() const {
    return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
  }
};

// Definition relations of TB_n, returned as descriptions of the ones that fail.
inline std::vector<std::string> tb_relation_failures(const TemperleyLiebB& alg) {
  std::vector<std::string> failures;
  const unsigned n = alg.n_strands();
  const auto& w = alg.weights();
  auto expect = [&](const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& what) {
    if (!(lhs == rhs)) failures.push_back(what + " at n=" + std::to_string(n));
  };
  auto e = [&](unsigned i) { return alg.e(i); };
  auto mul = [&](const AlgebraElement& x, const AlgebraElement& y) { return alg.mul(x, y); };

  expect(mul(e(0), e(0)), scale(w.c, e(0)), "e0 e0 = c e0");
  if (n >= 2) expect(mul(mul(e(1), e(0)), e(1)), scale(w.c_prime, e(1)), "e1 e0 e1 = c' e1");
  for (unsigned i = 1; i < n; ++i) {
    expect(mul(e(i), e(i)), scale(w.d, e(i)), "e" + std::to_string(i) + "^2 = d e" + std::to_string(i));
  }
  for (unsigned i = 1; i < n; ++i) {
    for (unsigned j = 1; j < n; ++j) {
      if (i + 1 != j && j + 1 != i) continue;
      expect(mul(mul(e(i), e(j)), e(i)), e(i),
             "e" + std::to_string(i) + " e" + std::to_string(j) + " e" + std::to_string(i) + " = e" +
                 std::to_string(i));
    }
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 2; j < n; ++j) {
      expect(mul(e(i), e(j)), mul(e(j), e(i)),
             "e" + std::to_string(i) + " e" + std::to_string(j) + " = e" + std::to_string(j) + " e" +
                 std::to_string(i));
    }
  }
  return failures;
}

// Random generator word over e_0 .. e_{max_index}.
template <class Rng>
std::vector<unsigned> random_generator_word(Rng& rng, unsigned max_index, unsigned max_length) {
  std::uniform_int_distribution<unsigned> length(0, max_length);
  std::uniform_int_distribution<unsigned> letter(0, max_index);
  std::vector<unsigned> word(length(rng));
  for (auto& l : word) l = letter(rng);
  return word;
}

namespace detail {

inline CheckResult timed_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline void fail(CheckResult& r, const std::string& what) {
  if (r.passed) r.detail = what;
  r.passed = false;
}

// Lattice sizes ordered so that the first failure found is a smallest one.
inline std::vector<std::pair<unsigned, unsigned>> lattice_sizes(unsigned max_rows, unsigned max_cols) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned total = 2; total <= max_rows + max_cols; ++total) {
    for (unsigned r = 1; r <= max_rows; ++r) {
      if (total > r && total - r >= 1 && total - r <= max_cols) out.emplace_back(r, total - r);
    }
  }
  return out;
}

inline ModelParams trace_model(const VerifyConfig& cfg, const ModelParams& m) {
  if (!cfg.mutate_beta) return m;
  return m.with_beta(m.beta() * QfScalar::rational(Rational(2), m.f()));
}

}  // namespace detail

inline VerifyReport run_verify_suite(const VerifyConfig& cfg) {
  VerifyReport report;
  std::mt19937_64 rng(cfg.seed);
  const auto sizes = detail::lattice_sizes(cfg.max_rows, cfg.max_cols);
  const std::vector<Rational> gauges{Rational(1), Rational(2)};

  report.checks.push_back(detail::timed_check("three_way_agreement", [&](CheckResult& r) {
    for (auto [rows, cols] : sizes) {
      for (auto f : cfg.f_list) {
        for (const auto& g : gauges) {
          const auto m = make_model(f, cfg.B, cfg.C, g);
          const auto graph = lattice_graph(rows, cols);
          const auto brute = brute_force_z(graph, m);
          const auto dc = deletion_contraction_z(graph, m);
          const auto trace = lattice_z(rows, cols, detail::trace_model(cfg, m));
          ++r.cases;
          if (brute == dc && dc == trace) continue;
          detail::fail(r, std::to_string(rows) + "x" + std::to_string(cols) + " f=" + std::to_string(f) +
                              ": brute " + brute.to_string() + ", dc " + dc.to_string() + ", trace " +
                              trace.to_string());
          if (!report.counterexample) {
            report.counterexample =
                LatticeCounterexample{rows, cols, f, g, brute.to_string(), dc.to_string(), trace.to_string()};
          }
        }
      }
    }
  }));

  report.checks.push_back(detail::timed_check("gauge_independence", [&](CheckResult& r) {
    for (auto [rows, cols] : sizes) {
      for (auto f : cfg.f_list) {
        const auto reference = lattice_z(rows, cols, detail::trace_model(cfg, make_model(f, cfg.B, cfg.C, 1)));
        for (const Rational g : {Rational(2), Rational(5), Rational(-1, 3)}) {
          ++r.cases;
          const auto z = lattice_z(rows, cols, detail::trace_model(cfg, make_model(f, cfg.B, cfg.C, g)));
          if (!(z == reference)) {
            detail::fail(r, std::to_string(rows) + "x" + std::to_string(cols) + " gauge " + to_string(g));
          }
        }
      }
    }
  }));

  report.checks.push_back(detail::timed_check("sqrt_f_cancellation", [&](CheckResult& r) {
    for (auto [rows, cols] : sizes) {
      for (auto f : cfg.f_list) {
        ++r.cases;
        const auto z = lattice_z(rows, cols, detail::trace_model(cfg, make_model(f, cfg.B, cfg.C)));
        if (!z.is_rational()) {
          detail::fail(r, std::to_string(rows) + "x" + std::to_string(cols) + " gives " + z.to_string());
        }
      }
    }
  }));

  report.checks.push_back(detail::timed_check("c_one_reduction", [&](CheckResult& r) {
    auto check = [&](const BoundaryGraph& g, std::uint64_t f, const std::string& label) {
      const auto m = make_model(f, cfg.B, Rational(1));
      BoundaryGraph stripped = g;
      stripped.boundary_bonds.clear();
      const auto expected = brute_force_z(stripped, m);
      ++r.cases;
      if (!(deletion_contraction_z(g, m) == expected && brute_force_z(g, m) == expected)) {
        detail::fail(r, label);
      }
    };
    for (auto [rows, cols] : sizes) {
      for (auto f : cfg.f_list) {
        const auto m = make_model(f, cfg.B, Rational(1));
        BoundaryGraph stripped = lattice_graph(rows, cols);
        stripped.boundary_bonds.clear();
        ++r.cases;
        if (!(lattice_z(rows, cols, detail::trace_model(cfg, m)) == brute_force_z(stripped, m))) {
          detail::fail(r, "trace " + std::to_string(rows) + "x" + std::to_string(cols));
        }
      }
    }
    for (unsigned k = 0; k < cfg.random_graphs; ++k) {
      check(random_boundary_graph(rng), cfg.f_list.at(k % cfg.f_list.size()), "random graph #" + std::to_string(k));
    }
  }));

  report.checks.push_back(detail::timed_check("f_one_closed_form", [&](CheckResult& r) {
    for (unsigned k = 0; k < cfg.random_graphs; ++k) {
      const auto g = random_boundary_graph(rng);
      const auto m = make_model(1, cfg.B, cfg.C);
      const auto expected = pow(QfScalar::one(1) + m.B(), static_cast<long>(g.inner_bonds.size()));
      ++r.cases;
      if (!(brute_force_z(g, m) == expected && deletion_contraction_z(g, m) == expected)) {
        detail::fail(r, "random graph #" + std::to_string(k));
      }
    }
  }));

  report.checks.push_back(detail::timed_check("algebra_relations", [&](CheckResult& r) {
    for (auto f : cfg.f_list) {
      for (const auto& g : gauges) {
        const auto weights = loop_weights(make_model(f, cfg.B, cfg.C, g));
        for (unsigned n = 1; n <= cfg.max_algebra_strands; ++n) {
          ++r.cases;
          for (const auto& what : tb_relation_failures(TemperleyLiebB(n, weights))) detail::fail(r, what);
        }
      }
    }
  }));

  report.checks.push_back(detail::timed_check("markov_property", [&](CheckResult& r) {
    for (unsigned k = 0; k < cfg.markov_pairs; ++k) {
      const unsigned n = 2 + k % 4;
      const auto f = cfg.f_list.at(k % cfg.f_list.size());
      const TemperleyLiebB alg(n, loop_weights(make_model(f, cfg.B, cfg.C, gauges[k % 2])));
      const auto a = alg.word(random_generator_word(rng, n - 2, 4));
      const auto b = alg.word(random_generator_word(rng, n - 2, 4));
      const auto lhs = alg.trace(alg.mul(alg.mul(a, alg.e(n - 1)), b));
      const auto rhs = alg.trace(alg.mul(a, b)) * alg.weights().d.inverse();
      ++r.cases;
      if (!(lhs == rhs)) detail::fail(r, "n=" + std::to_string(n) + " pair #" + std::to_string(k));
    }
    for (auto f : cfg.f_list) {
      const TemperleyLiebB alg(1, loop_weights(make_model(f, cfg.B, cfg.C)));
      ++r.cases;
      if (!(alg.trace(alg.one()) == QfScalar::one(f))) detail::fail(r, "tr(1) != 1");
      if (!(alg.trace(alg.e(0)) == alg.weights().c / alg.weights().d)) detail::fail(r, "tr(e0) != c/d");
    }
  }));

  return report;
}

}  // namespace bpotts
