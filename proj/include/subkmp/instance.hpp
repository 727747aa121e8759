#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subkmp/element_set.hpp"
#include "subkmp/family.hpp"
#include "subkmp/oracle.hpp"

namespace subkmp {

/// k agents, one oracle each (or a single shared oracle), and a feasible family
/// the union of the blocks must belong to.
struct MultiAgentInstance {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ValueOracle> functions;
  FeasibleFamily family;

  static MultiAgentInstance shared(const ValueOracle& f, std::size_t k, FeasibleFamily family);
  static MultiAgentInstance per_agent(std::vector<ValueOracle> functions, FeasibleFamily family);

  bool is_shared() const noexcept { return functions.size() == 1; }
  const ValueOracle& f(std::size_t agent) const { return functions[is_shared() ? 0 : agent]; }
  bool all_monotone() const;
  bool all_exact() const;

  /// Throws ContractError/InputError when the instance is malformed.
  void validate() const;

  /// Copy whose oracles all record into `ledger`.
  MultiAgentInstance counted(const std::shared_ptr<QueryLedger>& ledger) const;
};

/// k pairwise-disjoint non-empty blocks.
struct LabeledPartition {
  std::vector<ElementSet> blocks;
  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
};

/// k pairwise-disjoint blocks, empty blocks allowed.
struct Allocation {
  std::vector<ElementSet> blocks;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

ElementSet union_of(std::span<const ElementSet> blocks, std::size_t n);
bool pairwise_disjoint(std::span<const ElementSet> blocks);

/// Sum of f_i(block_i).
double objective(const MultiAgentInstance& inst, std::span<const ElementSet> blocks);
/// Exact sum; every oracle must be exact.
HalfInteger exact_objective(const MultiAgentInstance& inst, std::span<const ElementSet> blocks);

/// Throws InvariantViolation unless the blocks form a feasible k-way solution of `inst`.
void require_kway_feasible(const MultiAgentInstance& inst, std::span<const ElementSet> blocks);
/// Throws ContractError unless the blocks form a feasible allocation of `inst`.
void require_allocation_feasible(const MultiAgentInstance& inst, std::span<const ElementSet> blocks);

/// "{0} {1,2,3}"
std::string blocks_to_string(std::span<const ElementSet> blocks);

struct SolveReport {
  std::string solver;
  std::vector<ElementSet> blocks;
  bool kway = true;  // false for multi-agent allocations
  double objective = 0;
  std::optional<HalfInteger> exact_objective;
  std::uint64_t oracle_queries = 0;
  double wall_ms = 0;
  std::string fingerprint;
  // Lift decomposition, when the solver is lift based.
  std::optional<double> ma_objective;
  std::optional<double> matching_cost;
  std::uint64_t states_enumerated = 0;
};

}  // namespace subkmp
