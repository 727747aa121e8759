#include "subkmp/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "subkmp/error.hpp"

namespace subkmp {

LabeledPartition algorithm1(const ValueOracle& f, std::size_t k) {
  const std::size_t n = f.ground_size();
  if (!f.flags().monotone || !f.flags().nonnegative)
    fail(ErrorCode::ContractError, "algorithm1 requires a monotone non-negative oracle, got '" + f.name() + "'");
  if (k == 0) fail(ErrorCode::InputError, "k must be at least 1");
  if (k > n) fail(ErrorCode::Infeasible, "k > n: no k-way partition exists");

  std::vector<double> singleton(n);
  for (std::size_t v = 0; v < n; ++v) singleton[v] = f(ElementSet::from_indices(n, {static_cast<Element>(v)}));
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return singleton[a] < singleton[b]; });

  LabeledPartition out;
  ElementSet rest = ElementSet::full(n);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    out.blocks.push_back(ElementSet::from_indices(n, {order[i]}));
    rest.erase(order[i]);
  }
  out.blocks.push_back(std::move(rest));
  return out;
}

LabeledPartition greedy_splitting(const ValueOracle& f, std::size_t k, std::size_t split_cap) {
  const std::size_t n = f.ground_size();
  if (!f.flags().nonnegative) fail(ErrorCode::ContractError, "greedy splitting requires a non-negative oracle");
  if (k == 0) fail(ErrorCode::InputError, "k must be at least 1");
  if (k > n) fail(ErrorCode::Infeasible, "k > n: no k-way partition exists");

  LabeledPartition out{{ElementSet::full(n)}};
  std::vector<double> part_value{f(out.blocks[0])};
  while (out.blocks.size() < k) {
    bool found = false;
    double best_increase = 0;
    std::size_t best_part = 0;
    ElementSet best_side, best_other;
    double best_side_value = 0, best_other_value = 0;
    for (std::size_t p = 0; p < out.blocks.size(); ++p) {
      const ElementSet& part = out.blocks[p];
      if (part.size() < 2) continue;
      if (part.size() > split_cap) {
        fail(ErrorCode::BudgetExceeded, "part of size " + std::to_string(part.size()) +
                                            " exceeds the exhaustive split cap " + std::to_string(split_cap));
      }
      const std::vector<Element> members = part.elements();
      const std::size_t free_bits = members.size() - 1;
      // The smallest member always stays on `side`; the last pattern would take the whole part.
      for (std::uint64_t pattern = 0; pattern + 1 < (std::uint64_t{1} << free_bits); ++pattern) {
        ElementSet side(n);
        side.insert(members[0]);
        for (std::size_t b = 0; b < free_bits; ++b)
          if ((pattern >> b) & 1U) side.insert(members[b + 1]);
        ElementSet other = part - side;
        const double sv = f(side);
        const double ov = f(other);
        const double increase = sv + ov - part_value[p];
        if (!found || increase < best_increase) {
          found = true;
          best_increase = increase;
          best_part = p;
          best_side = std::move(side);
          best_other = std::move(other);
          best_side_value = sv;
          best_other_value = ov;
        }
      }
    }
    if (!found) fail(ErrorCode::Infeasible, "no part left to split");
    out.blocks[best_part] = std::move(best_side);
    part_value[best_part] = best_side_value;
    out.blocks.push_back(std::move(best_other));
    part_value.push_back(best_other_value);
  }
  return out;
}

ElementSet MatchingAssignment::matched(std::size_t n) const {
  ElementSet u(n);
  for (Element v : element_of_agent) u.insert(v);
  return u;
}

std::vector<std::size_t> solve_assignment(std::span<const double> cost, std::size_t rows, std::size_t cols) {
  if (rows > cols) fail(ErrorCode::Infeasible, "more rows than columns in assignment");
  if (cost.size() != rows * cols) fail(ErrorCode::ContractError, "cost matrix has the wrong size");
  if (rows == 0) return {};
  // Shortest augmenting paths with potentials; 1-based with column 0 as the virtual root.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(rows + 1, 0.0), v(cols + 1, 0.0);
  std::vector<std::size_t> match_col(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    match_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match_col[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * cols + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(rows);
  for (std::size_t j = 1; j <= cols; ++j)
    if (match_col[j] != 0) col_of_row[match_col[j] - 1] = j - 1;
  return col_of_row;
}

namespace {

// Above this many matrix entries the assignment is returned without the
// lexicographic canonicalisation pass.
constexpr std::size_t kCanonicalMatchingLimit = 4096;

double assignment_cost(std::span<const double> cost, std::size_t cols, const std::vector<std::size_t>& assign) {
  double sum = 0;
  for (std::size_t i = 0; i < assign.size(); ++i) sum += cost[i * cols + assign[i]];
  return sum;
}

// Optimal cost of rows [first, rows) over columns not in `taken`.
double residual_optimum(std::span<const double> cost, std::size_t rows, std::size_t cols, std::size_t first,
                        const std::vector<char>& taken) {
  if (first == rows) return 0;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (!taken[j]) free_cols.push_back(j);
  const std::size_t r = rows - first;
  if (free_cols.size() < r) return std::numeric_limits<double>::infinity();
  std::vector<double> sub(r * free_cols.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < free_cols.size(); ++j) sub[i * free_cols.size() + j] = cost[(first + i) * cols + free_cols[j]];
  return assignment_cost(sub, free_cols.size(), solve_assignment(sub, r, free_cols.size()));
}

}  // namespace

MatchingAssignment min_saturating_matching(const MultiAgentInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n, k = inst.k;
  if (k > n) fail(ErrorCode::Infeasible, "k > n: no saturating matching exists");

  std::vector<double> cost(k * n);
  for (std::size_t i = 0; i < inst.functions.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v)
      cost[i * n + v] = inst.functions[i](ElementSet::from_indices(n, {static_cast<Element>(v)}));
  }
  if (inst.is_shared()) {
    for (std::size_t i = 1; i < k; ++i) std::copy_n(cost.begin(), n, cost.begin() + static_cast<std::ptrdiff_t>(i * n));
  }

  std::vector<std::size_t> assign = solve_assignment(cost, k, n);
  const double optimum = assignment_cost(cost, n, assign);
  if (k * n <= kCanonicalMatchingLimit) {
    const double tol = inst.all_exact() ? 0.0 : kTolerance;
    std::vector<char> taken(n, 0);
    std::vector<std::size_t> canonical(k, n);
    double prefix = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        if (taken[v]) continue;
        const double head = prefix + cost[i * n + v];
        if (head > optimum + tol) continue;
        taken[v] = 1;
        if (head + residual_optimum(cost, k, n, i + 1, taken) <= optimum + tol) {
          canonical[i] = v;
          prefix = head;
          break;
        }
        taken[v] = 0;
      }
      if (canonical[i] == n) break;
    }
    if (canonical.back() != n) assign = std::move(canonical);
  }

  MatchingAssignment m;
  for (std::size_t i = 0; i < k; ++i) {
    m.element_of_agent.push_back(static_cast<Element>(assign[i]));
    m.cost += cost[i * n + assign[i]];
  }
  return m;
}

LiftResult lift_to_kway(const Allocation& ma, const MatchingAssignment& m, const MultiAgentInstance& inst) {
  if (!inst.family.claims_upwards_closed())
    fail(ErrorCode::ContractError, "lift requires an upwards-closed family, got '" + inst.family.name() + "'");
  if (!inst.all_monotone()) fail(ErrorCode::ContractError, "lift requires monotone oracles");
  require_allocation_feasible(inst, ma.blocks);
  if (m.element_of_agent.size() != inst.k) fail(ErrorCode::ContractError, "matching does not cover every agent");
  const ElementSet u = m.matched(inst.n);
  if (u.size() != inst.k) fail(ErrorCode::ContractError, "matching is not injective");

  LiftResult out;
  std::vector<ElementSet> stripped;
  for (std::size_t i = 0; i < inst.k; ++i) {
    stripped.push_back(ma.blocks[i] - u);
    ElementSet lifted = stripped.back();
    lifted.insert(m.element_of_agent[i]);
    out.partition.blocks.push_back(std::move(lifted));
  }
  if (!inst.family.contains(union_of(out.partition.blocks, inst.n))) {
    fail(ErrorCode::InvariantViolation,
         "lifted union left the family; the upwards-closed claim of '" + inst.family.name() + "' is false");
  }
  require_kway_feasible(inst, out.partition.blocks);

  out.ma_objective = objective(inst, ma.blocks);
  out.stripped_objective = objective(inst, stripped);
  out.lifted_objective = objective(inst, out.partition.blocks);
  out.matching_cost = m.cost;
  const double tol = inst.all_exact() ? 0.0 : kTolerance;
  if (out.lifted_objective > out.stripped_objective + m.cost + tol) {
    fail(ErrorCode::InvariantViolation, "subadditivity step failed: " + std::to_string(out.lifted_objective) + " > " +
                                            std::to_string(out.stripped_objective + m.cost));
  }
  if (out.stripped_objective > out.ma_objective + tol) {
    fail(ErrorCode::InvariantViolation, "monotonicity step failed: " + std::to_string(out.stripped_objective) +
                                            " > " + std::to_string(out.ma_objective));
  }
  return out;
}

MaSolver trivial_ma_solver() {
  return [](const MultiAgentInstance& inst) {
    Allocation a;
    a.blocks.assign(inst.k, ElementSet(inst.n));
    a.blocks[0] = ElementSet::full(inst.n);
    return a;
  };
}

MaSolver exact_ma_solver(EnumerationBudget budget) {
  return [budget](const MultiAgentInstance& inst) { return Allocation{brute_force_ma(inst, budget).blocks}; };
}

SolveReport solve_via_lift(const MultiAgentInstance& inst, const MaSolver& ma_solver, std::string name) {
  inst.validate();
  if (inst.k > inst.n) fail(ErrorCode::Infeasible, "k > n: no k-way solution exists");
  if (!inst.family.claims_upwards_closed())
    fail(ErrorCode::ContractError, "lift requires an upwards-closed family, got '" + inst.family.name() + "'");
  if (!inst.all_monotone()) fail(ErrorCode::ContractError, "lift requires monotone oracles");
  const auto start = std::chrono::steady_clock::now();
  auto ledger = std::make_shared<QueryLedger>(0);
  const MultiAgentInstance counted = inst.counted(ledger);

  const Allocation ma = ma_solver(counted);
  require_allocation_feasible(inst, ma.blocks);
  const MatchingAssignment m = min_saturating_matching(counted);
  const std::uint64_t queries = ledger->count();
  const LiftResult lifted = lift_to_kway(ma, m, inst);

  SolveReport report;
  report.solver = std::move(name);
  report.blocks = lifted.partition.blocks;
  report.objective = lifted.lifted_objective;
  if (inst.all_exact()) report.exact_objective = exact_objective(inst, report.blocks);
  report.ma_objective = lifted.ma_objective;
  report.matching_cost = lifted.matching_cost;
  report.oracle_queries = queries;
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SingleAgentResult single_agent_exact_min(const ValueOracle& f, const FeasibleFamily& fam) {
  const std::size_t n = f.ground_size();
  if (n > kSingleAgentScanLimit)
    fail(ErrorCode::BudgetExceeded, "single-agent scan limited to n <= " + std::to_string(kSingleAgentScanLimit));
  if (fam.ground_size() != n) fail(ErrorCode::InputError, "family is over a different ground set");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::optional<SingleAgentResult> best;
  for (std::uint64_t m = 0; m < count; ++m) {
    ElementSet s = ElementSet::from_mask(n, m);
    if (!fam.contains(s)) continue;
    const double value = f(s);
    if (!best || value < best->value || (value == best->value && canonical_less(s, best->set)))
      best = SingleAgentResult{std::move(s), value};
  }
  if (!best) fail(ErrorCode::Infeasible, "the feasible family is empty");
  return *best;
}

// --- registry ---------------------------------------------------------------

namespace {

void require_mon_sub_kmp(const MultiAgentInstance& inst, const std::string& solver) {
  if (!inst.is_shared() || inst.family.kind() != FamilyKind::WholeSet)
    fail(ErrorCode::ContractError, solver + " needs a single shared function and the whole-set family");
}

SolveReport run_partitioner(const MultiAgentInstance& inst, const std::string& name,
                            const std::function<LabeledPartition(const ValueOracle&)>& partition) {
  require_mon_sub_kmp(inst, name);
  const auto start = std::chrono::steady_clock::now();
  auto ledger = std::make_shared<QueryLedger>(0);
  LabeledPartition p = partition(wrap_counting(inst.functions[0], ledger));
  SolveReport report;
  report.solver = name;
  report.oracle_queries = ledger->count();
  require_kway_feasible(inst, p.blocks);
  report.objective = objective(inst, p.blocks);
  if (inst.all_exact()) report.exact_objective = exact_objective(inst, p.blocks);
  report.blocks = std::move(p.blocks);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::map<std::string, RegisteredSolver>& registry() {
  static const std::map<std::string, RegisteredSolver> solvers = {
      {"algorithm1",
       [](const MultiAgentInstance& inst, const SolverConfig&) {
         return run_partitioner(inst, "algorithm1", [&](const ValueOracle& f) { return algorithm1(f, inst.k); });
       }},
      {"greedy-split",
       [](const MultiAgentInstance& inst, const SolverConfig& config) {
         return run_partitioner(inst, "greedy-split",
                                [&](const ValueOracle& f) { return greedy_splitting(f, inst.k, config.split_cap); });
       }},
      {"lift-exact",
       [](const MultiAgentInstance& inst, const SolverConfig& config) {
         return solve_via_lift(inst, exact_ma_solver(config.budget), "lift-exact");
       }},
      {"lift-trivial",
       [](const MultiAgentInstance& inst, const SolverConfig&) {
         return solve_via_lift(inst, trivial_ma_solver(), "lift-trivial");
       }},
      {"exact",
       [](const MultiAgentInstance& inst, const SolverConfig& config) {
         return brute_force_kway(inst, config.budget);
       }},
  };
  return solvers;
}

}  // namespace

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {"algorithm1", "greedy-split", "lift-exact", "lift-trivial", "exact"};
  return names;
}

SolveReport run_solver(const std::string& name, const MultiAgentInstance& inst, const SolverConfig& config) {
  const auto& solvers = registry();
  const auto it = solvers.find(name);
  if (it == solvers.end()) fail(ErrorCode::InputError, "unknown solver '" + name + "'");
  inst.validate();
  if (inst.k > inst.n) fail(ErrorCode::Infeasible, "k > n: no k-way solution exists");
  SolveReport report = it->second(inst, config);
  require_kway_feasible(inst, report.blocks);
  return report;
}

}  // namespace subkmp
