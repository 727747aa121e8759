#include "subkmp/subkmp.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>

#include "subkmp/error.hpp"
#include "subkmp/hardness.hpp"
#include "subkmp/io.hpp"
#include "subkmp/properties.hpp"
#include "subkmp/solvers.hpp"

struct subkmp_instance {
  subkmp::LoadedInstance loaded;
};

struct subkmp_report {
  subkmp::SolveReport report;
  std::string objective_text;
  std::string blocks_text;
};

struct subkmp_gap_report {
  subkmp::GapReport report;
  std::string r_hex, easy, hard, bound, witness;
};

struct subkmp_distinguish_report {
  subkmp::DistinguishReport report;
  std::string r_hex;
};

struct subkmp_property_report {
  subkmp::PropertyReport report;
  std::string witness[4];
};

namespace {

thread_local std::string last_error;

subkmp_status to_status(subkmp::ErrorCode code) {
  switch (code) {
    case subkmp::ErrorCode::Infeasible:
      return SUBKMP_INFEASIBLE;
    case subkmp::ErrorCode::BudgetExceeded:
      return SUBKMP_BUDGET_EXCEEDED;
    case subkmp::ErrorCode::InvariantViolation:
      return SUBKMP_INVARIANT_VIOLATION;
    case subkmp::ErrorCode::InputError:
    case subkmp::ErrorCode::IndexOutOfRange:
    case subkmp::ErrorCode::ContractError:
      return SUBKMP_INPUT_ERROR;
  }
  return SUBKMP_INVARIANT_VIOLATION;
}

template <typename Fn>
subkmp_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SUBKMP_OK;
  } catch (const subkmp::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SUBKMP_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUBKMP_INVARIANT_VIOLATION;
  }
}

subkmp::GapKind gap_kind(subkmp_gap_kind kind) {
  return kind == SUBKMP_GAP_MONOTONE ? subkmp::GapKind::Monotone : subkmp::GapKind::Symmetric;
}

subkmp::BetaChoice beta_choice(std::int64_t beta) {
  subkmp::BetaChoice choice;
  if (beta > 0) choice.explicit_beta = beta;
  return choice;
}

std::string describe_witness(const subkmp::PropertyReport& r, int property) {
  switch (property) {
    case SUBKMP_PROP_SUBMODULAR:
      if (!r.submodular.witness) return "";
      return "A=" + r.submodular.witness->a.to_string() + " B=" + r.submodular.witness->b.to_string() +
             " v=" + std::to_string(r.submodular.witness->v) + " marginals " +
             subkmp::format_real(r.submodular.witness->marginal_a) + " < " +
             subkmp::format_real(r.submodular.witness->marginal_b);
    case SUBKMP_PROP_MONOTONE:
      if (!r.monotone.witness) return "";
      return "A=" + r.monotone.witness->a.to_string() + " B=" + r.monotone.witness->b.to_string();
    case SUBKMP_PROP_SYMMETRIC:
      if (!r.symmetric.witness) return "";
      return "S=" + r.symmetric.witness->s.to_string();
    default:
      if (!r.nonnegative.witness) return "";
      return "S=" + r.nonnegative.witness->s.to_string();
  }
}

}  // namespace

extern "C" {

const char* subkmp_version(void) { return "0.1.0"; }
const char* subkmp_last_error(void) { return last_error.c_str(); }

size_t subkmp_solver_count(void) { return subkmp::solver_names().size(); }
const char* subkmp_solver_name(size_t index) {
  const auto& names = subkmp::solver_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

subkmp_status subkmp_instance_parse(const char* text, const char* base_dir, subkmp_instance** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) subkmp::fail(subkmp::ErrorCode::InputError, "null argument");
    auto inst = std::make_unique<subkmp_instance>();
    inst->loaded = subkmp::parse_instance(text, base_dir ? base_dir : ".");
    *out = inst.release();
  });
}

subkmp_status subkmp_instance_load(const char* path, subkmp_instance** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) subkmp::fail(subkmp::ErrorCode::InputError, "null argument");
    const std::string text = subkmp::read_file(path);
    auto inst = std::make_unique<subkmp_instance>();
    const auto dir = std::filesystem::path(path).parent_path().string();
    inst->loaded = subkmp::parse_instance(text, dir.empty() ? "." : dir);
    *out = inst.release();
  });
}

void subkmp_instance_free(subkmp_instance* inst) { delete inst; }
size_t subkmp_instance_n(const subkmp_instance* inst) { return inst->loaded.inst.n; }
size_t subkmp_instance_k(const subkmp_instance* inst) { return inst->loaded.inst.k; }
uint64_t subkmp_instance_seed(const subkmp_instance* inst) { return inst->loaded.seed; }
const char* subkmp_instance_solver(const subkmp_instance* inst) { return inst->loaded.solver.c_str(); }
const char* subkmp_instance_fingerprint(const subkmp_instance* inst) { return inst->loaded.fingerprint.c_str(); }
void subkmp_instance_set_max_states(subkmp_instance* inst, uint64_t max_states) {
  inst->loaded.config.budget.max_states = max_states;
}

subkmp_status subkmp_solve(const subkmp_instance* inst, const char* solver, subkmp_report** out) {
  return guarded([&] {
    if (inst == nullptr || out == nullptr) subkmp::fail(subkmp::ErrorCode::InputError, "null argument");
    const std::string name = solver ? solver : inst->loaded.solver;
    auto r = std::make_unique<subkmp_report>();
    r->report = subkmp::run_solver(name, inst->loaded.inst, inst->loaded.config);
    r->report.fingerprint = inst->loaded.fingerprint;
    r->objective_text = r->report.exact_objective ? r->report.exact_objective->to_string()
                                                  : subkmp::format_real(r->report.objective);
    r->blocks_text = subkmp::blocks_to_string(r->report.blocks);
    *out = r.release();
  });
}

void subkmp_report_free(subkmp_report* report) { delete report; }
const char* subkmp_report_solver(const subkmp_report* r) { return r->report.solver.c_str(); }
double subkmp_report_objective(const subkmp_report* r) { return r->report.objective; }
const char* subkmp_report_objective_text(const subkmp_report* r) { return r->objective_text.c_str(); }
uint64_t subkmp_report_queries(const subkmp_report* r) { return r->report.oracle_queries; }
double subkmp_report_wall_ms(const subkmp_report* r) { return r->report.wall_ms; }
size_t subkmp_report_block_count(const subkmp_report* r) { return r->report.blocks.size(); }
size_t subkmp_report_block(const subkmp_report* r, size_t i, uint32_t* out, size_t capacity) {
  if (i >= r->report.blocks.size()) return 0;
  const auto elements = r->report.blocks[i].elements();
  for (size_t j = 0; j < elements.size() && j < capacity && out != nullptr; ++j) out[j] = elements[j];
  return elements.size();
}
const char* subkmp_report_blocks_text(const subkmp_report* r) { return r->blocks_text.c_str(); }

subkmp_status subkmp_gap_run(const subkmp_gap_options* options, subkmp_gap_report** out) {
  return guarded([&] {
    if (options == nullptr || out == nullptr) subkmp::fail(subkmp::ErrorCode::InputError, "null argument");
    auto r = std::make_unique<subkmp_gap_report>();
    subkmp::EnumerationBudget budget;
    if (options->max_states != 0) budget.max_states = options->max_states;
    r->report = subkmp::run_gap_experiment(
        gap_kind(options->kind), options->n, beta_choice(options->beta), subkmp::RChoice{std::nullopt, options->seed},
        options->exhaustive ? subkmp::GapMode::Exhaustive : subkmp::GapMode::Constructive, budget);
    r->r_hex = r->report.params.r.to_hex();
    r->easy = r->report.value_easy.to_string();
    r->hard = r->report.value_hard.to_string();
    r->bound = r->report.hard_bound.to_string();
    r->witness = subkmp::blocks_to_string(r->report.witness.blocks);
    *out = r.release();
  });
}

void subkmp_gap_report_free(subkmp_gap_report* report) { delete report; }
uint32_t subkmp_gap_n(const subkmp_gap_report* r) { return static_cast<uint32_t>(r->report.params.n); }
uint32_t subkmp_gap_k(const subkmp_gap_report* r) { return static_cast<uint32_t>(r->report.k); }
int64_t subkmp_gap_beta(const subkmp_gap_report* r) { return r->report.params.beta; }
double subkmp_gap_epsilon(const subkmp_gap_report* r) { return r->report.params.epsilon; }
const char* subkmp_gap_r_hex(const subkmp_gap_report* r) { return r->r_hex.c_str(); }
int subkmp_gap_exhaustive(const subkmp_gap_report* r) { return r->report.mode == subkmp::GapMode::Exhaustive; }
const char* subkmp_gap_value_easy(const subkmp_gap_report* r) { return r->easy.c_str(); }
const char* subkmp_gap_value_hard(const subkmp_gap_report* r) { return r->hard.c_str(); }
const char* subkmp_gap_hard_bound(const subkmp_gap_report* r) { return r->bound.c_str(); }
double subkmp_gap_ratio(const subkmp_gap_report* r) { return r->report.ratio; }
double subkmp_gap_ratio_bound(const subkmp_gap_report* r) { return r->report.ratio_bound; }
uint64_t subkmp_gap_partitions_checked(const subkmp_gap_report* r) { return r->report.partitions_checked; }
const char* subkmp_gap_witness_text(const subkmp_gap_report* r) { return r->witness.c_str(); }

subkmp_status subkmp_distinguish_run(const subkmp_distinguish_options* options, subkmp_distinguish_report** out) {
  return guarded([&] {
    if (options == nullptr || out == nullptr) subkmp::fail(subkmp::ErrorCode::InputError, "null argument");
    subkmp::QueryDistribution dist = subkmp::IndependentHalf{};
    if (options->size_m != 0) dist = subkmp::UniformSize{options->size_m};
    auto r = std::make_unique<subkmp_distinguish_report>();
    r->report = subkmp::distinguishability_experiment(gap_kind(options->kind), options->n, beta_choice(options->beta),
                                                      subkmp::RChoice{std::nullopt, options->seed},
                                                      options->queries, dist);
    r->r_hex = r->report.params.r.to_hex();
    *out = r.release();
  });
}

void subkmp_distinguish_report_free(subkmp_distinguish_report* report) { delete report; }
int64_t subkmp_distinguish_beta(const subkmp_distinguish_report* r) { return r->report.params.beta; }
double subkmp_distinguish_epsilon(const subkmp_distinguish_report* r) { return r->report.params.epsilon; }
const char* subkmp_distinguish_r_hex(const subkmp_distinguish_report* r) { return r->r_hex.c_str(); }
const char* subkmp_distinguish_distribution(const subkmp_distinguish_report* r) {
  return r->report.distribution.c_str();
}
uint64_t subkmp_distinguish_distinguished(const subkmp_distinguish_report* r) { return r->report.distinguished; }
double subkmp_distinguish_fraction(const subkmp_distinguish_report* r) { return r->report.fraction; }
uint64_t subkmp_distinguish_equivalence_failures(const subkmp_distinguish_report* r) {
  return r->report.equivalence_failures;
}
uint64_t subkmp_distinguish_ledger_count(const subkmp_distinguish_report* r) { return r->report.ledger_count; }

subkmp_status subkmp_check_function(const char* spec_json, uint64_t trials, uint64_t seed,
                                    subkmp_property_report** out) {
  return guarded([&] {
    if (spec_json == nullptr || out == nullptr) subkmp::fail(subkmp::ErrorCode::InputError, "null argument");
    std::optional<std::size_t> n;
    const subkmp::FunctionSpec spec = subkmp::parse_function_spec(spec_json, &n);
    if (!n) subkmp::fail(subkmp::ErrorCode::InputError, "function: missing key 'n'");
    const subkmp::ValueOracle oracle = subkmp::build_function(spec, *n);
    subkmp::CheckMode mode = subkmp::Exhaustive{};
    if (trials != 0) mode = subkmp::Randomized{trials, seed};
    auto r = std::make_unique<subkmp_property_report>();
    r->report = subkmp::check_properties(oracle, mode);
    for (int p = 0; p < 4; ++p) r->witness[p] = describe_witness(r->report, p);
    *out = r.release();
  });
}

void subkmp_property_report_free(subkmp_property_report* report) { delete report; }
const char* subkmp_property_oracle_name(const subkmp_property_report* r) { return r->report.oracle_name.c_str(); }

int subkmp_property_claimed(const subkmp_property_report* r, subkmp_property property) {
  const auto& c = r->report.claimed;
  switch (property) {
    case SUBKMP_PROP_SUBMODULAR:
      return c.submodular;
    case SUBKMP_PROP_MONOTONE:
      return c.monotone;
    case SUBKMP_PROP_SYMMETRIC:
      return c.symmetric;
    case SUBKMP_PROP_NONNEGATIVE:
      return c.nonnegative;
  }
  return 0;
}

int subkmp_property_holds(const subkmp_property_report* r, subkmp_property property) {
  switch (property) {
    case SUBKMP_PROP_SUBMODULAR:
      return r->report.submodular.holds;
    case SUBKMP_PROP_MONOTONE:
      return r->report.monotone.holds;
    case SUBKMP_PROP_SYMMETRIC:
      return r->report.symmetric.holds;
    case SUBKMP_PROP_NONNEGATIVE:
      return r->report.nonnegative.holds;
  }
  return 0;
}

const char* subkmp_property_witness(const subkmp_property_report* r, subkmp_property property) {
  const int p = static_cast<int>(property);
  return p >= 0 && p < 4 ? r->witness[p].c_str() : "";
}

}  // extern "C"
