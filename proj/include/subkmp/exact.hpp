#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "subkmp/instance.hpp"

namespace subkmp {

struct EnumerationBudget {
  std::uint64_t max_states = 100'000'000;
};

/// base^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

using BlockVisitor = std::function<void(std::span<const ElementSet>)>;

/// Visits every surjective labeling of {0..n-1} with labels 0..k-1 exactly once.
///
/// Order is that of a base-k odometer with element 0 as the fastest digit.
/// Throws BudgetExceeded if k^n exceeds the budget. Returns the number visited.
std::uint64_t enumerate_labeled_partitions(std::size_t n, std::size_t k, const BlockVisitor& visit,
                                           EnumerationBudget budget = {});

/// Visits every feasible k-way solution of `inst` (non-empty disjoint blocks
/// whose union is in the family). With a whole-set family this is the
/// surjective-labeling stream; otherwise elements may stay unassigned.
std::uint64_t enumerate_kway_solutions(const MultiAgentInstance& inst, const BlockVisitor& visit,
                                       EnumerationBudget budget = {});

/// Visits every feasible allocation (empty blocks allowed, union in the family).
std::uint64_t enumerate_allocations(const MultiAgentInstance& inst, const BlockVisitor& visit,
                                    EnumerationBudget budget = {});

/// Exact k-way optimum; the first optimum in enumeration order wins.
/// Throws Infeasible or BudgetExceeded.
SolveReport brute_force_kway(const MultiAgentInstance& inst, EnumerationBudget budget = {});

/// Exact multi-agent optimum (empty blocks allowed).
SolveReport brute_force_ma(const MultiAgentInstance& inst, EnumerationBudget budget = {});

}  // namespace subkmp
