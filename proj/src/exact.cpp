#include "subkmp/exact.hpp"

#include <chrono>
#include <limits>

#include "subkmp/error.hpp"

namespace subkmp {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

namespace {

void require_budget(std::uint64_t states, const EnumerationBudget& budget, const char* what) {
  if (states > budget.max_states) {
    fail(ErrorCode::BudgetExceeded, std::string(what) + " needs " + std::to_string(states) +
                                        " states, budget is " + std::to_string(budget.max_states));
  }
}

// Depth-first labeling in odometer order: the last element is the slowest
// digit, element 0 the fastest. Label 0 means "unassigned" when
// `with_unassigned`; block b then corresponds to label b + 1.
class Labeler {
 public:
  Labeler(std::size_t n, std::size_t k, bool with_unassigned, bool nonempty, const FeasibleFamily* family,
          const BlockVisitor& visit)
      : n_(n),
        k_(k),
        with_unassigned_(with_unassigned),
        nonempty_(nonempty),
        family_(family),
        visit_(visit),
        blocks_(k, ElementSet(n)),
        assigned_(n) {}

  std::uint64_t run() {
    empty_blocks_ = k_;
    descend(n_);
    return visited_;
  }

 private:
  void descend(std::size_t remaining) {
    if (nonempty_ && empty_blocks_ > remaining) return;
    if (remaining == 0) {
      if (family_ != nullptr && !family_->contains(assigned_)) return;
      ++visited_;
      visit_(blocks_);
      return;
    }
    const auto v = static_cast<Element>(remaining - 1);
    if (with_unassigned_) descend(remaining - 1);
    for (std::size_t b = 0; b < k_; ++b) {
      ElementSet& block = blocks_[b];
      const bool was_empty = block.empty();
      block.insert(v);
      assigned_.insert(v);
      if (was_empty) --empty_blocks_;
      descend(remaining - 1);
      if (was_empty) ++empty_blocks_;
      assigned_.erase(v);
      block.erase(v);
    }
  }

  std::size_t n_, k_;
  bool with_unassigned_, nonempty_;
  const FeasibleFamily* family_;
  const BlockVisitor& visit_;
  std::vector<ElementSet> blocks_;
  ElementSet assigned_;
  std::size_t empty_blocks_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t enumerate_labeled_partitions(std::size_t n, std::size_t k, const BlockVisitor& visit,
                                           EnumerationBudget budget) {
  if (k == 0 || k > n) fail(ErrorCode::Infeasible, "need 1 <= k <= n for labeled partitions");
  require_budget(saturating_pow(k, n), budget, "labeled-partition enumeration");
  return Labeler(n, k, false, true, nullptr, visit).run();
}

std::uint64_t enumerate_kway_solutions(const MultiAgentInstance& inst, const BlockVisitor& visit,
                                       EnumerationBudget budget) {
  inst.validate();
  if (inst.k > inst.n) fail(ErrorCode::Infeasible, "k > n: no k-way solution exists");
  if (inst.family.kind() == FamilyKind::WholeSet) return enumerate_labeled_partitions(inst.n, inst.k, visit, budget);
  require_budget(saturating_pow(inst.k + 1, inst.n), budget, "k-way enumeration");
  return Labeler(inst.n, inst.k, true, true, &inst.family, visit).run();
}

std::uint64_t enumerate_allocations(const MultiAgentInstance& inst, const BlockVisitor& visit,
                                    EnumerationBudget budget) {
  inst.validate();
  require_budget(saturating_pow(inst.k + 1, inst.n), budget, "allocation enumeration");
  return Labeler(inst.n, inst.k, true, false, &inst.family, visit).run();
}

namespace {

template <typename Enumerate>
SolveReport brute_force(const MultiAgentInstance& inst, EnumerationBudget budget, bool kway, const char* what,
                        Enumerate&& enumerate) {
  const auto start = std::chrono::steady_clock::now();
  auto ledger = std::make_shared<QueryLedger>(0);
  const MultiAgentInstance counted = inst.counted(ledger);
  SolveReport report;
  report.solver = kway ? "exact" : "exact-ma";
  report.kway = kway;
  bool found = false;
  double best = 0;
  report.states_enumerated = enumerate(
      counted,
      [&](std::span<const ElementSet> blocks) {
        const double value = objective(counted, blocks);
        if (!found || value < best) {
          found = true;
          best = value;
          report.blocks.assign(blocks.begin(), blocks.end());
        }
      },
      budget);
  if (!found) fail(ErrorCode::Infeasible, std::string("no feasible ") + what + " exists");
  report.objective = best;
  report.oracle_queries = ledger->count();
  if (inst.all_exact()) report.exact_objective = exact_objective(inst, report.blocks);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SolveReport brute_force_kway(const MultiAgentInstance& inst, EnumerationBudget budget) {
  if (inst.k > inst.n) fail(ErrorCode::Infeasible, "k > n: no k-way solution exists");
  return brute_force(inst, budget, true, "k-way solution", [](const auto& i, const auto& v, auto b) {
    return enumerate_kway_solutions(i, v, b);
  });
}

SolveReport brute_force_ma(const MultiAgentInstance& inst, EnumerationBudget budget) {
  return brute_force(inst, budget, false, "allocation", [](const auto& i, const auto& v, auto b) {
    return enumerate_allocations(i, v, b);
  });
}

}  // namespace subkmp
