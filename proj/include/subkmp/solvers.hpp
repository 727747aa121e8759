#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "subkmp/exact.hpp"
#include "subkmp/instance.hpp"

namespace subkmp {

/// Sorts elements by singleton value (stable, ties by index) and returns the
/// k-1 cheapest singletons plus the rest. Makes exactly n oracle queries.
LabeledPartition algorithm1(const ValueOracle& f, std::size_t k);

inline constexpr std::size_t kDefaultSplitCap = 20;

/// k-1 rounds of the cheapest 2-split over all current parts, each split
/// found by exhaustive search. The side holding the part's smallest element
/// keeps the part's position; the other side is appended.
LabeledPartition greedy_splitting(const ValueOracle& f, std::size_t k, std::size_t split_cap = kDefaultSplitCap);

/// Agent i receives element element_of_agent[i].
struct MatchingAssignment {
  std::vector<Element> element_of_agent;
  double cost = 0;

  ElementSet matched(std::size_t n) const;
};

/// Minimum-cost injective assignment of one element per agent with cost
/// f_i({v}). Among optimal assignments the lexicographically smallest
/// (agent 0's element first) is returned.
MatchingAssignment min_saturating_matching(const MultiAgentInstance& inst);

/// Rectangular assignment on a rows x cols cost matrix (rows <= cols),
/// row-major. Returns the column of each row.
std::vector<std::size_t> solve_assignment(std::span<const double> cost, std::size_t rows, std::size_t cols);

struct LiftResult {
  LabeledPartition partition;
  double lifted_objective = 0;    // sum f_i(S'_i)
  double stripped_objective = 0;  // sum f_i(S_i \ U)
  double ma_objective = 0;        // sum f_i(S_i)
  double matching_cost = 0;
};

/// S'_i = (S_i \ U) + u_i. Checks the chain
/// sum f_i(S'_i) <= sum f_i(S_i \ U) + cost(M) <= sum f_i(S_i) + cost(M).
LiftResult lift_to_kway(const Allocation& ma, const MatchingAssignment& m, const MultiAgentInstance& inst);

using MaSolver = std::function<Allocation(const MultiAgentInstance&)>;

/// (V, {}, ..., {}).
MaSolver trivial_ma_solver();
MaSolver exact_ma_solver(EnumerationBudget budget = {});

SolveReport solve_via_lift(const MultiAgentInstance& inst, const MaSolver& ma_solver, std::string name = "lift");

struct SingleAgentResult {
  ElementSet set;
  double value = 0;
};

inline constexpr std::size_t kSingleAgentScanLimit = 20;

/// argmin f(S) over S in F by full scan; ties go to the canonical smallest set.
SingleAgentResult single_agent_exact_min(const ValueOracle& f, const FeasibleFamily& fam);

// --- registry ---------------------------------------------------------------

struct SolverConfig {
  EnumerationBudget budget;
  std::size_t split_cap = kDefaultSplitCap;
};

using RegisteredSolver = std::function<SolveReport(const MultiAgentInstance&, const SolverConfig&)>;

/// Names: algorithm1, greedy-split, lift-exact, lift-trivial, exact.
const std::vector<std::string>& solver_names();
/// Runs the named solver with query counting and timing. Throws InputError for unknown names.
SolveReport run_solver(const std::string& name, const MultiAgentInstance& inst, const SolverConfig& config = {});

}  // namespace subkmp
