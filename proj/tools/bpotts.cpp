// bpotts: boundary Potts partition functions by enumeration,
// deletion-contraction and the type-B Temperley-Lieb trace.

#include <bpotts/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace bpotts;
using namespace bpotts::cli;

struct ParamFlags {
  std::uint64_t f = 2;
  std::string B = "-1/2";
  std::string C = "1/3";
  std::string c_gauge = "1";
  std::optional<double> kT;
  std::optional<double> kappa;

  void add_to(CLI::App* app, bool physical) {
    app->add_option("--f", f, "Number of spin states")->check(CLI::PositiveNumber);
    app->add_option("--B", B, "Inner bond weight B as p/q");
    app->add_option("--C", C, "Boundary weight C as p/q");
    app->add_option("--c-gauge", c_gauge, "Gauge c' (c = c' sqrt f) as p/q");
    if (physical) {
      app->add_option("--kT", kT, "Temperature k*T; derives B and C (needs --kappa)");
      app->add_option("--kappa", kappa, "Boundary coupling; used with --kT");
    }
  }

  ExactParams resolve() const {
    const Rational gauge = parse_rational(c_gauge);
    if (kT || kappa) {
      if (!kT || !kappa) throw ParameterError("--kT and --kappa must be given together");
      return from_physical(f, {*kT, *kappa}, gauge);
    }
    return {f, parse_rational(B), parse_rational(C), gauge};
  }
};

int emit(const CommandOutput& out) {
  std::cout << out.text;
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary Potts model partition functions"};
  app.require_subcommand(1);

  LatticeRequest lattice;
  ParamFlags lattice_params;
  auto* lattice_cmd = app.add_subcommand("lattice", "Partition function of a rows x cols lattice");
  lattice_cmd->add_option("--rows", lattice.rows, "Rows (each bonded to the wall)")->required();
  lattice_cmd->add_option("--cols", lattice.cols, "Columns")->required();
  lattice_cmd->add_option("--method", lattice.method, "brute|dc|trace|all")
      ->check(CLI::IsMember({"brute", "dc", "trace", "all"}));
  lattice_cmd->add_option("--budget", lattice.enumeration_budget, "Maximum spin states to enumerate");
  lattice_cmd->add_option("--max-strands", lattice.max_strands, "Maximum strands for the trace method");
  lattice_cmd->add_option("--workers", lattice.workers, "Enumeration threads");
  lattice_params.add_to(lattice_cmd, true);

  GraphRequest graph;
  ParamFlags graph_params;
  auto* graph_cmd = app.add_subcommand("graph", "Partition function of a boundary graph given as JSON");
  graph_cmd->add_option("--input", graph.input_path, "Graph JSON file")->required();
  graph_cmd->add_option("--method", graph.method, "brute|dc|both")->check(CLI::IsMember({"brute", "dc", "both"}));
  graph_cmd->add_option("--budget", graph.enumeration_budget, "Maximum spin states to enumerate");
  graph_cmd->add_option("--workers", graph.workers, "Enumeration threads");
  graph_params.add_to(graph_cmd, false);

  VerifyConfig verify;
  std::string verify_mutation;
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-method invariant suite");
  verify_cmd->add_option("--max-rows", verify.max_rows, "Largest lattice row count");
  verify_cmd->add_option("--max-cols", verify.max_cols, "Largest lattice column count");
  verify_cmd->add_option("--f-list", verify.f_list, "State counts to test")->delimiter(',');
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized checks");
  verify_cmd->add_option("--mutate", verify_mutation, "Negative control")
      ->check(CLI::IsMember({"beta"}))
      ->group("");

  BenchRequest bench;
  ParamFlags bench_params;
  auto* bench_cmd = app.add_subcommand("bench", "Time all methods across lattice sizes");
  bench_cmd->add_option("--max-rows", bench.max_rows, "Sweep rows 1..N");
  bench_cmd->add_option("--max-cols", bench.max_cols, "Sweep cols 1..N");
  bench_cmd->add_option("--format", bench.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_option("--budget", bench.enumeration_budget, "Maximum spin states to enumerate");
  bench_cmd->add_option("--max-strands", bench.max_strands, "Maximum strands for the trace method");
  bench_cmd->add_option("--dc-max-bonds", bench.dc_max_bonds, "Skip deletion-contraction above this bond count");
  bench_params.add_to(bench_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*lattice_cmd) {
      lattice.params = lattice_params.resolve();
      return emit(run_lattice(lattice));
    }
    if (*graph_cmd) {
      graph.params = graph_params.resolve();
      return emit(run_graph(graph));
    }
    if (*verify_cmd) {
      verify.mutate_beta = verify_mutation == "beta";
      return emit(run_verify(verify));
    }
    if (*bench_cmd) {
      bench.params = bench_params.resolve();
      return emit(run_bench(bench));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  }
  return kUsageError;
}
