#pragma once

// Report builders behind the `bpotts` subcommands. Argument parsing lives in
// tools/bpotts.cpp; everything here takes typed requests and returns the
// output text plus the process exit code.

#include <bpotts/braid_link.hpp>
#include <bpotts/graph_json.hpp>
#include <bpotts/model.hpp>
#include <bpotts/partition.hpp>
#include <bpotts/verify.hpp>

#include <json.hpp>

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bpotts::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

struct CommandOutput {
  std::string text;  // written to stdout
  int exit_code = kSuccess;
};

struct ExactParams {
  std::uint64_t f = 2;
  Rational B{-1, 2};
  Rational C{1, 3};
  Rational c_gauge{1};
};

// Exact binary value of a double.
inline Rational exact_rational(double x) {
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  const Rational two(2);
  for (; exponent > 0; --exponent) r *= two;
  for (; exponent < 0; ++exponent) r /= two;
  return r;
}

// Parameters derived from --kT/--kappa. The doubles are taken at their exact
// binary value so the rest of the pipeline stays exact.
inline ExactParams from_physical(std::uint64_t f, const PhysicalParams& p, const Rational& c_gauge) {
  const auto w = physical_to_model(p);
  return {f, exact_rational(w.B), exact_rational(w.C), c_gauge};
}

struct MethodResult {
  std::string method;
  std::optional<QfScalar> value;
  double seconds = 0.0;
  std::string skipped_reason;
};

inline nlohmann::json to_json(const MethodResult& r) {
  nlohmann::json j{{"method", r.method}, {"seconds", r.seconds}};
  if (r.value) {
    j["value"] = r.value->to_string();
    j["float"] = r.value->to_double();
  } else {
    j["skipped"] = r.skipped_reason;
  }
  return j;
}

template <class Fn>
MethodResult timed(const std::string& method, Fn&& fn) {
  MethodResult r{method, std::nullopt, 0.0, {}};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.value = fn();
  } catch (const BudgetExceeded& e) {
    r.skipped_reason = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline nlohmann::json params_json(const ExactParams& p) {
  return {{"f", p.f}, {"B", to_string(p.B)}, {"C", to_string(p.C)}, {"c_gauge", to_string(p.c_gauge)}};
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline CommandOutput error_output(int code, const std::string& command, const std::string& message) {
  return {dump({{"command", command}, {"error", message}}), code};
}

// Fills in "agree" and the exit code for a set of method results.
inline CommandOutput finish_methods(nlohmann::json report, const std::vector<MethodResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool any_skipped = false;
  std::optional<QfScalar> first;
  bool agree = true;
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    if (!r.value) {
      any_skipped = true;
      continue;
    }
    if (!first) {
      first = r.value;
    } else if (!(*first == *r.value)) {
      agree = false;
    }
  }
  report["results"] = arr;
  if (results.size() > 1) report["agree"] = agree;
  if (!agree) {
    nlohmann::json diff = nlohmann::json::object();
    for (const auto& r : results) {
      if (r.value) diff[r.method] = (*r.value - *first).to_string();
    }
    report["diff_from_first"] = diff;
  }
  int code = kSuccess;
  if (!agree) {
    code = kVerificationFailure;
  } else if (any_skipped) {
    code = kBudgetExceeded;
  }
  return {dump(report), code};
}

struct LatticeRequest {
  unsigned rows = 1;
  unsigned cols = 1;
  ExactParams params;
  std::string method = "all";  // brute | dc | trace | all
  std::uint64_t enumeration_budget = 2'000'000;
  unsigned max_strands = 8;
  unsigned workers = 1;
};

inline CommandOutput run_lattice(const LatticeRequest& req) {
  static const std::vector<std::string> methods{"brute", "dc", "trace", "all"};
  if (std::ranges::find(methods, req.method) == methods.end()) {
    return error_output(kUsageError, "lattice", "unknown method '" + req.method + "'");
  }
  try {
    const auto m = make_model(req.params.f, req.params.B, req.params.C, req.params.c_gauge);
    if (req.rows == 0 || req.cols == 0) throw ParameterError("rows and cols must be positive");
    const auto graph = lattice_graph(req.rows, req.cols);
    const bool all = req.method == "all";
    std::vector<MethodResult> results;
    if (all || req.method == "brute") {
      results.push_back(timed("brute", [&] {
        return brute_force_z(graph, m, {req.enumeration_budget, req.workers});
      }));
    }
    if (all || req.method == "dc") {
      results.push_back(timed("dc", [&] { return deletion_contraction_z(graph, m); }));
    }
    if (all || req.method == "trace") {
      results.push_back(timed("trace", [&] { return lattice_z(req.rows, req.cols, m, {req.max_strands}); }));
    }
    nlohmann::json report{{"command", "lattice"},
                          {"rows", req.rows},
                          {"cols", req.cols},
                          {"params", params_json(req.params)}};
    return finish_methods(std::move(report), results);
  } catch (const ParameterError& e) {
    return error_output(kUsageError, "lattice", e.what());
  }
}

struct GraphRequest {
  std::string input_path;
  ExactParams params;
  std::string method = "both";  // brute | dc | both
  std::uint64_t enumeration_budget = 2'000'000;
  unsigned workers = 1;
};

inline CommandOutput run_graph(const GraphRequest& req) {
  if (req.method != "brute" && req.method != "dc" && req.method != "both") {
    return error_output(kUsageError, "graph", "unknown method '" + req.method + "'");
  }
  try {
    const auto g = read_graph_file(req.input_path);
    if (auto violations = validate(g); !violations.empty()) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& v : violations) list.push_back(v.detail);
      return {dump({{"command", "graph"}, {"error", "invalid graph"}, {"violations", list}}), kUsageError};
    }
    const auto m = make_model(req.params.f, req.params.B, req.params.C, req.params.c_gauge);
    std::vector<MethodResult> results;
    if (req.method != "dc") {
      results.push_back(timed("brute", [&] {
        return brute_force_z(g, m, {req.enumeration_budget, req.workers});
      }));
    }
    if (req.method != "brute") {
      results.push_back(timed("dc", [&] { return deletion_contraction_z(g, m); }));
    }
    nlohmann::json report{{"command", "graph"},
                          {"input", req.input_path},
                          {"vertices", g.vertices.size()},
                          {"inner_bonds", g.inner_bonds.size()},
                          {"boundary_bonds", g.boundary_bonds.size()},
                          {"params", params_json(req.params)}};
    return finish_methods(std::move(report), results);
  } catch (const ParseError& e) {
    return error_output(kUsageError, "graph", e.what());
  } catch (const ParameterError& e) {
    return error_output(kUsageError, "graph", e.what());
  }
}

inline CommandOutput run_verify(const VerifyConfig& cfg) {
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = run_verify_suite(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
      nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"seconds", c.seconds}};
      if (!c.passed) j["detail"] = c.detail;
      checks.push_back(j);
    }
    nlohmann::json out{{"command", "verify"},
                       {"passed", report.passed()},
                       {"checks", checks},
                       {"seconds", seconds},
                       {"max_rows", cfg.max_rows},
                       {"max_cols", cfg.max_cols},
                       {"f_list", cfg.f_list}};
    if (cfg.mutate_beta) out["mutation"] = "beta";
    if (report.counterexample) {
      const auto& ce = *report.counterexample;
      out["counterexample"] = {{"rows", ce.rows},   {"cols", ce.cols},   {"f", ce.f},
                               {"c_gauge", to_string(ce.c_gauge)},       {"brute", ce.brute},
                               {"dc", ce.dc},       {"trace", ce.trace}};
    }
    return {dump(out), report.passed() ? kSuccess : kVerificationFailure};
  } catch (const ParameterError& e) {
    return error_output(kUsageError, "verify", e.what());
  }
}

struct BenchRequest {
  unsigned max_rows = 3;
  unsigned max_cols = 3;
  ExactParams params;
  std::string format = "csv";  // csv | json
  std::uint64_t enumeration_budget = 2'000'000;
  unsigned max_strands = 8;
  unsigned dc_max_bonds = 22;
};

struct BenchRow {
  unsigned rows;
  unsigned cols;
  MethodResult result;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  bool all_agree = true;
};

inline BenchTable run_bench_table(const BenchRequest& req) {
  const auto m = make_model(req.params.f, req.params.B, req.params.C, req.params.c_gauge);
  BenchTable table;
  for (unsigned r = 1; r <= req.max_rows; ++r) {
    for (unsigned c = 1; c <= req.max_cols; ++c) {
      const auto graph = lattice_graph(r, c);
      std::vector<MethodResult> cell;
      cell.push_back(timed("brute", [&] { return brute_force_z(graph, m, {req.enumeration_budget, 1}); }));
      cell.push_back(timed("dc", [&] {
        if (graph.bond_count() > req.dc_max_bonds) {
          throw BudgetExceeded("recursion over " + std::to_string(graph.bond_count()) + " bonds exceeds " +
                               std::to_string(req.dc_max_bonds));
        }
        return deletion_contraction_z(graph, m);
      }));
      cell.push_back(timed("trace", [&] { return lattice_z(r, c, m, {req.max_strands}); }));
      std::optional<QfScalar> first;
      for (const auto& res : cell) {
        if (!res.value) continue;
        if (!first) first = res.value;
        if (!(*first == *res.value)) table.all_agree = false;
      }
      for (auto& res : cell) table.rows.push_back({r, c, std::move(res)});
    }
  }
  return table;
}

inline CommandOutput run_bench(const BenchRequest& req) {
  if (req.format != "csv" && req.format != "json") {
    return error_output(kUsageError, "bench", "unknown format '" + req.format + "'");
  }
  try {
    const auto table = run_bench_table(req);
    const int code = table.all_agree ? kSuccess : kVerificationFailure;
    if (req.format == "csv") {
      std::ostringstream os;
      os << "rows,cols,f,method,seconds,value\n";
      for (const auto& row : table.rows) {
        os << row.rows << ',' << row.cols << ',' << req.params.f << ',' << row.result.method << ',';
        if (row.result.value) {
          os << row.result.seconds << ',' << row.result.value->to_string() << '\n';
        } else {
          os << "skipped,skipped\n";
        }
      }
      return {os.str(), code};
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : table.rows) {
      auto j = to_json(row.result);
      j["rows"] = row.rows;
      j["cols"] = row.cols;
      j["f"] = req.params.f;
      arr.push_back(j);
    }
    return {dump({{"command", "bench"}, {"agree", table.all_agree}, {"results", arr}}), code};
  } catch (const ParameterError& e) {
    return error_output(kUsageError, "bench", e.what());
  }
}

}  // namespace bpotts::cli
