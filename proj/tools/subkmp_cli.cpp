// Command-line driver. Talks to the library only through the C interface.
#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "subkmp/subkmp.h"

namespace {

struct Failure {
  int status;
};

void check(subkmp_status status) {
  if (status != SUBKMP_OK) {
    std::cerr << "error: " << subkmp_last_error() << "\n";
    throw Failure{static_cast<int>(status)};
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using InstancePtr = std::unique_ptr<subkmp_instance, Deleter<subkmp_instance, subkmp_instance_free>>;
using ReportPtr = std::unique_ptr<subkmp_report, Deleter<subkmp_report, subkmp_report_free>>;
using GapPtr = std::unique_ptr<subkmp_gap_report, Deleter<subkmp_gap_report, subkmp_gap_report_free>>;
using DistPtr =
    std::unique_ptr<subkmp_distinguish_report, Deleter<subkmp_distinguish_report, subkmp_distinguish_report_free>>;
using PropPtr =
    std::unique_ptr<subkmp_property_report, Deleter<subkmp_property_report, subkmp_property_report_free>>;

std::string real(double x) {
  if (x == 0.0) return "0";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Output {
  bool csv = false;
  bool timing = false;
};

// Rows of cells printed either as CSV or as a left-aligned table.
void emit(const Output& out, const std::vector<std::string>& comments, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& c : comments) std::cout << "# " << c << "\n";
  if (out.csv) {
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    return;
  }
  std::vector<size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

const std::vector<std::string> kSolverHeader = {"solver", "objective", "ratio-to-exact", "oracle_queries", "wall_ms",
                                                "seed"};

InstancePtr load(const std::string& path) {
  subkmp_instance* raw = nullptr;
  check(subkmp_instance_load(path.c_str(), &raw));
  InstancePtr inst(raw);
  if (const char* env = std::getenv("SUBKMP_MAX_STATES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      std::cerr << "error: SUBKMP_MAX_STATES must be a positive integer\n";
      throw Failure{SUBKMP_INPUT_ERROR};
    }
    subkmp_instance_set_max_states(inst.get(), v);
  }
  return inst;
}

ReportPtr solve(const subkmp_instance* inst, const std::string& solver) {
  subkmp_report* raw = nullptr;
  check(subkmp_solve(inst, solver.empty() ? nullptr : solver.c_str(), &raw));
  return ReportPtr(raw);
}

std::string ratio(double objective, double exact) {
  if (exact == 0.0) return objective == 0.0 ? "1" : "inf";
  return real(objective / exact);
}

std::vector<std::string> solver_row(const Output& out, const subkmp_report* r, const std::string& ratio_cell,
                                    uint64_t seed) {
  return {subkmp_report_solver(r),
          subkmp_report_objective_text(r),
          ratio_cell,
          std::to_string(subkmp_report_queries(r)),
          out.timing ? real(subkmp_report_wall_ms(r)) : "-",
          std::to_string(seed)};
}

int run_solve(const Output& out, const std::string& path, const std::string& solver) {
  InstancePtr inst = load(path);
  ReportPtr r = solve(inst.get(), solver);
  const bool exact = std::string(subkmp_report_solver(r.get())) == "exact";
  emit(out,
       {subkmp_instance_fingerprint(inst.get()),
        std::string("blocks ") + subkmp_report_solver(r.get()) + " " + subkmp_report_blocks_text(r.get())},
       {kSolverHeader, solver_row(out, r.get(), exact ? "1" : "-", subkmp_instance_seed(inst.get()))});
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int run_compare(const Output& out, const std::string& path, const std::string& solvers) {
  InstancePtr inst = load(path);
  const uint64_t seed = subkmp_instance_seed(inst.get());
  ReportPtr exact = solve(inst.get(), "exact");
  const double opt = subkmp_report_objective(exact.get());
  std::vector<std::string> comments = {subkmp_instance_fingerprint(inst.get()),
                                       std::string("blocks exact ") + subkmp_report_blocks_text(exact.get())};
  std::vector<std::vector<std::string>> rows = {kSolverHeader};
  std::vector<std::string> names = split_list(solvers);
  if (names.empty()) {
    std::cerr << "error: --solvers is empty\n";
    return SUBKMP_INPUT_ERROR;
  }
  for (const auto& name : names) {
    if (name == "exact") continue;
    ReportPtr r = solve(inst.get(), name);
    comments.push_back("blocks " + name + " " + subkmp_report_blocks_text(r.get()));
    rows.push_back(solver_row(out, r.get(), ratio(subkmp_report_objective(r.get()), opt), seed));
  }
  rows.push_back(solver_row(out, exact.get(), "1", seed));
  emit(out, comments, rows);
  return 0;
}

subkmp_gap_kind parse_kind(const std::string& kind) {
  return kind == "mon" ? SUBKMP_GAP_MONOTONE : SUBKMP_GAP_SYMMETRIC;
}

int run_gap(const Output& out, const std::string& kind, uint32_t n, int64_t beta, uint64_t seed, bool exhaustive) {
  subkmp_gap_options opts{};
  opts.kind = parse_kind(kind);
  opts.n = n;
  opts.beta = beta;
  opts.seed = seed;
  opts.exhaustive = exhaustive ? 1 : 0;
  if (const char* env = std::getenv("SUBKMP_MAX_STATES"); env != nullptr && *env != '\0') {
    opts.max_states = std::strtoull(env, nullptr, 10);
  }
  subkmp_gap_report* raw = nullptr;
  check(subkmp_gap_run(&opts, &raw));
  GapPtr r(raw);
  const std::string fp = "kind=" + kind + " n=" + std::to_string(subkmp_gap_n(r.get())) +
                         " k=" + std::to_string(subkmp_gap_k(r.get())) +
                         " beta=" + std::to_string(subkmp_gap_beta(r.get())) +
                         " eps=" + real(subkmp_gap_epsilon(r.get())) + " R=" + subkmp_gap_r_hex(r.get()) +
                         " seed=" + std::to_string(seed);
  const bool ex = subkmp_gap_exhaustive(r.get()) != 0;
  emit(out, {fp, std::string("witness ") + subkmp_gap_witness_text(r.get())},
       {{"quantity", "value"},
        {"mode", ex ? "exhaustive" : "constructive"},
        {"easy_objective", subkmp_gap_value_easy(r.get())},
        {ex ? "hard_opt" : "hard_witness", subkmp_gap_value_hard(r.get())},
        {"hard_bound", subkmp_gap_hard_bound(r.get())},
        {"ratio", real(subkmp_gap_ratio(r.get()))},
        {"ratio_bound", real(subkmp_gap_ratio_bound(r.get()))},
        {"partitions_checked", std::to_string(subkmp_gap_partitions_checked(r.get()))}});
  return 0;
}

int run_distinguish(const Output& out, const std::string& kind, uint32_t n, int64_t beta, uint64_t queries,
                    uint64_t seed, const std::string& dist, double threshold) {
  subkmp_distinguish_options opts{};
  opts.kind = parse_kind(kind);
  opts.n = n;
  opts.beta = beta;
  opts.seed = seed;
  opts.queries = queries;
  if (dist != "p-half") {
    if (dist.rfind("size:", 0) != 0) {
      std::cerr << "error: --dist must be p-half or size:M\n";
      return SUBKMP_INPUT_ERROR;
    }
    try {
      opts.size_m = static_cast<uint32_t>(std::stoul(dist.substr(5)));
    } catch (const std::exception&) {
      std::cerr << "error: bad size in --dist\n";
      return SUBKMP_INPUT_ERROR;
    }
  }
  subkmp_distinguish_report* raw = nullptr;
  check(subkmp_distinguish_run(&opts, &raw));
  DistPtr r(raw);
  const double fraction = subkmp_distinguish_fraction(r.get());
  const std::string fp = "kind=" + kind + " n=" + std::to_string(n) +
                         " beta=" + std::to_string(subkmp_distinguish_beta(r.get())) +
                         " eps=" + real(subkmp_distinguish_epsilon(r.get())) + " R=" + subkmp_distinguish_r_hex(r.get()) +
                         " seed=" + std::to_string(seed) + " dist=" + subkmp_distinguish_distribution(r.get());
  emit(out, {fp},
       {{"quantity", "value"},
        {"queries", std::to_string(queries)},
        {"distinguished", std::to_string(subkmp_distinguish_distinguished(r.get()))},
        {"fraction", real(fraction)},
        {"threshold", real(threshold)},
        {"within_threshold", fraction <= threshold ? "yes" : "no"},
        {"equivalence_failures", std::to_string(subkmp_distinguish_equivalence_failures(r.get()))},
        {"oracle_queries", std::to_string(subkmp_distinguish_ledger_count(r.get()))}});
  return subkmp_distinguish_equivalence_failures(r.get()) == 0 ? 0 : SUBKMP_INVARIANT_VIOLATION;
}

int run_check(const Output& out, const std::string& spec, uint64_t trials, uint64_t seed) {
  std::string text = spec;
  if (spec.find('{') == std::string::npos) {
    std::ifstream in(spec);
    if (!in) {
      std::cerr << "error: cannot read " << spec << "\n";
      return SUBKMP_INPUT_ERROR;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  subkmp_property_report* raw = nullptr;
  check(subkmp_check_function(text.c_str(), trials, seed, &raw));
  PropPtr r(raw);
  const std::pair<subkmp_property, const char*> props[] = {{SUBKMP_PROP_SUBMODULAR, "submodular"},
                                                           {SUBKMP_PROP_MONOTONE, "monotone"},
                                                           {SUBKMP_PROP_SYMMETRIC, "symmetric"},
                                                           {SUBKMP_PROP_NONNEGATIVE, "nonnegative"}};
  std::vector<std::vector<std::string>> rows = {{"property", "claimed", "holds", "witness"}};
  bool claims_ok = true;
  for (const auto& [p, name] : props) {
    const bool claimed = subkmp_property_claimed(r.get(), p) != 0;
    const bool holds = subkmp_property_holds(r.get(), p) != 0;
    if (claimed && !holds) claims_ok = false;
    const std::string w = subkmp_property_witness(r.get(), p);
    rows.push_back({name, claimed ? "yes" : "no", holds ? "yes" : "no", w.empty() ? "-" : w});
  }
  const std::string mode = trials == 0 ? "exhaustive" : "randomized trials=" + std::to_string(trials) +
                                                             " seed=" + std::to_string(seed);
  emit(out, {std::string(subkmp_property_oracle_name(r.get())) + " " + mode}, rows);
  return claims_ok ? 0 : SUBKMP_INVARIANT_VIOLATION;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular multiway partition toolkit"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--csv", out.csv, "Emit CSV instead of an aligned table");
  app.add_flag("--timing", out.timing, "Report wall-clock milliseconds (output is then not reproducible)");

  std::string file, solver, solvers = "algorithm1,greedy-split,lift-exact";
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver on an instance file");
  solve_cmd->add_option("file", file, "Instance descriptor (JSON)")->required();
  solve_cmd->add_option("--solver", solver, "Solver name (default: descriptor's solver)");

  auto* exact_cmd = app.add_subcommand("exact", "Brute-force optimum of an instance file");
  exact_cmd->add_option("file", file, "Instance descriptor (JSON)")->required();

  auto* compare_cmd = app.add_subcommand("compare", "Ratio table of several solvers against the exact optimum");
  compare_cmd->add_option("file", file, "Instance descriptor (JSON)")->required();
  compare_cmd->add_option("--solvers", solvers, "Comma-separated solver names");

  std::string kind = "sym";
  uint32_t n = 8;
  int64_t beta = 0;
  uint64_t seed = 0;
  bool exhaustive = false;
  auto* gap_cmd = app.add_subcommand("gap", "Hardness gap instance: easy objective against the hard optimum");
  gap_cmd->add_option("--kind", kind, "sym or mon")->check(CLI::IsMember({"sym", "mon"}));
  gap_cmd->add_option("--n", n, "Ground set size (even)")->required();
  gap_cmd->add_option("--beta", beta, "Explicit beta (default: policy)");
  gap_cmd->add_option("--seed", seed, "Seed for drawing R");
  gap_cmd->add_flag("--exhaustive", exhaustive, "Enumerate every feasible partition");

  uint64_t queries = 100000;
  std::string dist = "p-half";
  double threshold = 0.01;
  auto* dist_cmd = app.add_subcommand("distinguish", "Random queries that separate the paired hardness functions");
  dist_cmd->add_option("--kind", kind, "sym or mon")->check(CLI::IsMember({"sym", "mon"}));
  dist_cmd->add_option("--n", n, "Ground set size (even)")->required();
  dist_cmd->add_option("--beta", beta, "Explicit beta (default: policy)");
  dist_cmd->add_option("--queries", queries, "Number of random queries");
  dist_cmd->add_option("--seed", seed, "Seed for R and the queries");
  dist_cmd->add_option("--dist", dist, "p-half or size:M");
  dist_cmd->add_option("--threshold", threshold, "Fraction regarded as indistinguishable");

  std::string spec;
  uint64_t trials = 0;
  auto* check_cmd = app.add_subcommand("check", "Property check of a function spec (inline JSON or file)");
  check_cmd->add_option("spec", spec, "Function spec with an \"n\" key")->required();
  check_cmd->add_option("--trials", trials, "Random trials (0 = exhaustive)");
  check_cmd->add_option("--seed", seed, "Seed for randomized trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : SUBKMP_INPUT_ERROR;
  }

  try {
    if (*solve_cmd) return run_solve(out, file, solver);
    if (*exact_cmd) return run_solve(out, file, "exact");
    if (*compare_cmd) return run_compare(out, file, solvers);
    if (*gap_cmd) return run_gap(out, kind, n, beta, seed, exhaustive);
    if (*dist_cmd) return run_distinguish(out, kind, n, beta, queries, seed, dist, threshold);
    if (*check_cmd) return run_check(out, spec, trials, seed);
  } catch (const Failure& f) {
    return f.status;
  }
  return SUBKMP_INPUT_ERROR;
}
