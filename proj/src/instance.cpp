#include "subkmp/instance.hpp"

#include <cmath>

#include "subkmp/error.hpp"

namespace subkmp {

MultiAgentInstance MultiAgentInstance::shared(const ValueOracle& f, std::size_t k, FeasibleFamily family) {
  MultiAgentInstance inst{f.ground_size(), k, {f}, std::move(family)};
  inst.validate();
  return inst;
}

MultiAgentInstance MultiAgentInstance::per_agent(std::vector<ValueOracle> functions, FeasibleFamily family) {
  if (functions.empty()) fail(ErrorCode::InputError, "at least one agent is required");
  const std::size_t n = functions.front().ground_size();
  const std::size_t k = functions.size();
  MultiAgentInstance inst{n, k, std::move(functions), std::move(family)};
  inst.validate();
  return inst;
}

bool MultiAgentInstance::all_monotone() const {
  for (const auto& f : functions)
    if (!f.flags().monotone) return false;
  return true;
}

bool MultiAgentInstance::all_exact() const {
  for (const auto& f : functions)
    if (!f.is_exact()) return false;
  return true;
}

void MultiAgentInstance::validate() const {
  if (n == 0) fail(ErrorCode::InputError, "ground set must be non-empty");
  if (k == 0) fail(ErrorCode::InputError, "k must be at least 1");
  if (functions.size() != 1 && functions.size() != k)
    fail(ErrorCode::InputError, "expected 1 shared or k per-agent functions");
  for (const auto& f : functions) {
    if (f.ground_size() != n) fail(ErrorCode::InputError, "oracle '" + f.name() + "' is over a different ground set");
    if (!f.flags().nonnegative) fail(ErrorCode::ContractError, "oracle '" + f.name() + "' does not claim non-negativity");
  }
  if (family.ground_size() != n) fail(ErrorCode::InputError, "family is over a different ground set");
}

MultiAgentInstance MultiAgentInstance::counted(const std::shared_ptr<QueryLedger>& ledger) const {
  MultiAgentInstance out = *this;
  for (auto& f : out.functions) f = wrap_counting(f, ledger);
  return out;
}

ElementSet union_of(std::span<const ElementSet> blocks, std::size_t n) {
  ElementSet u(n);
  for (const auto& b : blocks) u = u | b;
  return u;
}

bool pairwise_disjoint(std::span<const ElementSet> blocks) {
  std::size_t total = 0;
  const std::size_t n = blocks.empty() ? 0 : blocks.front().ground_size();
  for (const auto& b : blocks) total += b.size();
  return total == union_of(blocks, n).size();
}

double objective(const MultiAgentInstance& inst, std::span<const ElementSet> blocks) {
  double sum = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) sum += inst.f(i)(blocks[i]);
  return sum;
}

HalfInteger exact_objective(const MultiAgentInstance& inst, std::span<const ElementSet> blocks) {
  HalfInteger sum;
  for (std::size_t i = 0; i < blocks.size(); ++i) sum += inst.f(i).exact(blocks[i]);
  return sum;
}

void require_kway_feasible(const MultiAgentInstance& inst, std::span<const ElementSet> blocks) {
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::InvariantViolation, "infeasible k-way solution " + blocks_to_string(blocks) + ": " + what);
  };
  if (blocks.size() != inst.k) bad("wrong number of blocks");
  for (const auto& b : blocks) {
    if (b.ground_size() != inst.n) bad("block over a different ground set");
    if (b.empty()) bad("empty block");
  }
  if (!pairwise_disjoint(blocks)) bad("blocks overlap");
  if (!inst.family.contains(union_of(blocks, inst.n))) bad("union not in the feasible family");
}

void require_allocation_feasible(const MultiAgentInstance& inst, std::span<const ElementSet> blocks) {
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::ContractError, "infeasible allocation " + blocks_to_string(blocks) + ": " + what);
  };
  if (blocks.size() != inst.k) bad("wrong number of blocks");
  for (const auto& b : blocks)
    if (b.ground_size() != inst.n) bad("block over a different ground set");
  if (!pairwise_disjoint(blocks)) bad("blocks overlap");
  if (!inst.family.contains(union_of(blocks, inst.n))) bad("union not in the feasible family");
}

std::string blocks_to_string(std::span<const ElementSet> blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ' ';
    out += blocks[i].to_string();
  }
  return out;
}

}  // namespace subkmp
