#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "subkmp/error.hpp"
#include "subkmp/exact.hpp"
#include "subkmp/hardness.hpp"
#include "subkmp/solvers.hpp"
#include "support/random_instances.hpp"

using namespace subkmp;

namespace {

const GraphSpec kPath{3, {{0, 1, 1}, {1, 2, 1}}};
const GraphSpec kTriangle{3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}};

HardnessParams params8() { return HardnessParams::with_beta(8, ElementSet::from_indices(8, {0, 1, 2, 3}), 3); }

ValueOracle scaled(const ValueOracle& f, double c) {
  return ValueOracle(f.ground_size(), f.name() + "*c", f.flags(),
                     ValueOracle::Evaluator([f, c](const ElementSet& s) { return c * f(s); }));
}

// Minimum over all injective row -> column maps, by permutations of column subsets.
double brute_assignment(const std::vector<double>& cost, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pick(cols);
  std::iota(pick.begin(), pick.end(), 0);
  double best = 1e300;
  do {
    double total = 0;
    for (std::size_t i = 0; i < rows; ++i) total += cost[i * cols + pick[i]];
    best = std::min(best, total);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

MultiAgentInstance whole(const ValueOracle& f, std::size_t k) {
  return MultiAgentInstance::shared(f, k, make_family(family::WholeSet{}, f.ground_size()));
}

}  // namespace

TEST(Algorithm1, TruncatedCardinality) {
  const ValueOracle f = make_truncated_cardinality(4, 2);
  const LabeledPartition p = algorithm1(f, 2);
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[0], ElementSet::from_indices(4, {0}));
  EXPECT_EQ(p.blocks[1], ElementSet::from_indices(4, {1, 2, 3}));
  EXPECT_EQ(objective(whole(f, 2), p.blocks), 3.0);
  EXPECT_EQ(brute_force_kway(whole(f, 2)).objective, 3.0);
}

TEST(Algorithm1, KEqualsNGivesSingletons) {
  std::vector<double> w = {3, 1, 2, 5};
  const ValueOracle f = make_modular(w);
  const LabeledPartition p = algorithm1(f, 4);
  for (const auto& b : p.blocks) EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(objective(whole(f, 4), p.blocks), 11.0);
}

TEST(Algorithm1, F3GivesEight) {
  const ValueOracle f3 = make_hardness(HardnessKind::F3, params8());
  const LabeledPartition p = algorithm1(f3, 5);
  EXPECT_EQ(exact_objective(whole(f3, 5), p.blocks), HalfInteger::from_int(8));
  EXPECT_EQ(p.blocks.back().size(), 4u);
}

TEST(Algorithm1, StableTieBreakingAndCheapestFirst) {
  std::vector<double> w = {2, 1, 1, 3, 1};
  const LabeledPartition p = algorithm1(make_modular(w), 3);
  EXPECT_EQ(p.blocks[0], ElementSet::from_indices(5, {1}));
  EXPECT_EQ(p.blocks[1], ElementSet::from_indices(5, {2}));
  EXPECT_EQ(p.blocks[2], ElementSet::from_indices(5, {0, 3, 4}));
}

TEST(Algorithm1, Contracts) {
  const ValueOracle f1 = make_hardness(HardnessKind::F1, params8());
  try {
    algorithm1(f1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContractError);
  }
  EXPECT_THROW(algorithm1(make_cardinality(3), 4), Error);
}

TEST(Algorithm1, QueriesExactlyN) {
  for (std::size_t n : {3u, 10u, 40u}) {
    auto [f, ledger] = wrap_counting(make_truncated_cardinality(n, 2));
    (void)algorithm1(f, 3);
    EXPECT_EQ(ledger->count(), n);
  }
}

TEST(Algorithm1, WithinFactorTwoOnRandomInstances) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + t % 6;
    const ValueOracle f = fixtures::random_monotone_function(n, rng);
    const std::size_t k = 2 + t % std::min<std::size_t>(3, n - 1);
    const double opt = brute_force_kway(whole(f, k)).objective;
    EXPECT_LE(objective(whole(f, k), algorithm1(f, k).blocks), 2 * opt + 1e-9) << f.name();
  }
}

TEST(GreedySplitting, KOneIsUntouched) {
  const LabeledPartition p = greedy_splitting(make_cardinality(5), 1);
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0], ElementSet::full(5));
}

TEST(GreedySplitting, PathCut) {
  const ValueOracle delta = make_graph_functions(kPath).delta;
  const LabeledPartition p = greedy_splitting(delta, 2);
  const double value = objective(whole(delta, 2), p.blocks);
  // the sum counts the crossing edge once per side, so the cut weight is half of it
  EXPECT_EQ(value / 2, 1.0);
  // the middle vertex never sits alone
  for (const auto& b : p.blocks) EXPECT_NE(b, ElementSet::from_indices(3, {1}));
}

TEST(GreedySplitting, F3GivesEight) {
  const ValueOracle f3 = make_hardness(HardnessKind::F3, params8());
  EXPECT_EQ(exact_objective(whole(f3, 5), greedy_splitting(f3, 5).blocks), HalfInteger::from_int(8));
}

TEST(GreedySplitting, SplitCap) {
  try {
    greedy_splitting(make_cardinality(10), 2, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(GreedySplitting, FeasibleAndBoundedOnRandomInstances) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + t % 6;
    const ValueOracle f = fixtures::random_monotone_function(n, rng);
    const std::size_t k = 2 + t % std::min<std::size_t>(3, n - 1);
    const auto inst = whole(f, k);
    const LabeledPartition p = greedy_splitting(f, k);
    require_kway_feasible(inst, p.blocks);
    EXPECT_LE(objective(inst, p.blocks), 2 * brute_force_kway(inst).objective + 1e-9);
  }
}

TEST(Matching, TwoAgentExample) {
  // rows: agent costs on (a, b); other elements cost 10
  std::vector<double> w1 = {1, 2, 10}, w2 = {3, 1, 10};
  const auto inst = MultiAgentInstance::per_agent({make_modular(w1), make_modular(w2)},
                                                  make_family(family::WholeSet{}, 3));
  const MatchingAssignment m = min_saturating_matching(inst);
  EXPECT_EQ(m.element_of_agent, (std::vector<Element>{0, 1}));
  EXPECT_EQ(m.cost, 2.0);
  EXPECT_EQ(m.matched(3), ElementSet::from_indices(3, {0, 1}));
}

TEST(Matching, SharedTakesCheapestColumns) {
  std::vector<double> w = {5, 1, 4, 2, 3};
  const auto inst = whole(make_modular(w), 3);
  const MatchingAssignment m = min_saturating_matching(inst);
  EXPECT_EQ(m.cost, 6.0);
  EXPECT_EQ(m.matched(5), ElementSet::from_indices(5, {1, 3, 4}));
}

TEST(Matching, CounterexampleCost) {
  const LiftGapInstance cx = lift_gap_counterexample(3, 100, 0.1, 8);
  const MatchingAssignment m = min_saturating_matching(cx.inst);
  EXPECT_NEAR(m.cost, 3.2, 1e-9);
  EXPECT_FALSE(cx.t.contains(m.element_of_agent[1]));
  EXPECT_FALSE(cx.t.contains(m.element_of_agent[2]));
}

TEST(Matching, HungarianMatchesBruteForce) {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<int> d(0, 9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + t % 4, cols = rows + t % 4;
    std::vector<double> cost(rows * cols);
    for (auto& c : cost) c = d(rng);
    const auto assign = solve_assignment(cost, rows, cols);
    ASSERT_EQ(assign.size(), rows);
    double total = 0;
    for (std::size_t i = 0; i < rows; ++i) total += cost[i * cols + assign[i]];
    std::vector<std::size_t> sorted = assign;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ASSERT_EQ(total, brute_assignment(cost, rows, cols));
  }
}

TEST(Matching, LowerBoundsKwayOptimum) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto ri = fixtures::random_monotone_instance(seed, 7, 3);
    EXPECT_LE(min_saturating_matching(ri.inst).cost, brute_force_kway(ri.inst).objective + 1e-9) << seed;
  }
}

TEST(Matching, ScalingLeavesChoicesUnchanged) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + t % 5;
    const ValueOracle f = fixtures::random_monotone_function(n, rng);
    const ValueOracle g = fixtures::random_monotone_function(n, rng);
    const auto fam = make_family(family::WholeSet{}, n);
    const auto a = min_saturating_matching(MultiAgentInstance::per_agent({f, g}, fam));
    const auto b = min_saturating_matching(MultiAgentInstance::per_agent({scaled(f, 3.5), scaled(g, 3.5)}, fam));
    EXPECT_EQ(a.element_of_agent, b.element_of_agent);
    EXPECT_EQ(algorithm1(f, 2), algorithm1(scaled(f, 3.5), 2));
  }
}

TEST(Matching, InfeasibleWhenKExceedsN) {
  EXPECT_THROW(min_saturating_matching(whole(make_cardinality(2), 3)), Error);
}

TEST(Lift, WholeSetMerge) {
  const auto inst = whole(make_cardinality(5), 3);
  const MatchingAssignment m{{0, 1, 2}, 3.0};
  const Allocation ma{{ElementSet::full(5), ElementSet(5), ElementSet(5)}};
  const LiftResult r = lift_to_kway(ma, m, inst);
  EXPECT_EQ(r.partition.blocks[0], ElementSet::from_indices(5, {0, 3, 4}));
  EXPECT_EQ(r.partition.blocks[1], ElementSet::from_indices(5, {1}));
  EXPECT_EQ(r.partition.blocks[2], ElementSet::from_indices(5, {2}));
}

TEST(Lift, F3Chain) {
  const ValueOracle f3 = make_hardness(HardnessKind::F3, params8());
  const auto inst = whole(f3, 5);
  const MatchingAssignment m = min_saturating_matching(inst);
  Allocation ma{std::vector<ElementSet>(5, ElementSet(8))};
  ma.blocks[0] = ElementSet::full(8);
  const LiftResult r = lift_to_kway(ma, m, inst);
  EXPECT_EQ(r.lifted_objective, 8.0);
  EXPECT_EQ(r.ma_objective, 4.0);
  EXPECT_EQ(r.matching_cost, 5.0);
  EXPECT_LE(r.lifted_objective, r.stripped_objective + r.matching_cost);
  EXPECT_LE(r.stripped_objective, r.ma_objective);
}

TEST(Lift, SingleAgent) {
  const auto inst = whole(make_cardinality(4), 1);
  const MatchingAssignment m{{2}, 1.0};
  const LiftResult r = lift_to_kway(Allocation{{ElementSet::full(4)}}, m, inst);
  EXPECT_EQ(r.partition.blocks[0], ElementSet::full(4));
}

TEST(Lift, RejectsNonUpwardsClosedFamily) {
  const FeasibleFamily pairs(3, "size-2", FamilyKind::Custom, false, [](const ElementSet& s) { return s.size() == 2; });
  const auto inst = MultiAgentInstance::shared(make_cardinality(3), 2, pairs);
  const MatchingAssignment m{{0, 1}, 2.0};
  try {
    lift_to_kway(Allocation{{ElementSet::from_indices(3, {0, 1}), ElementSet(3)}}, m, inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContractError);
  }
}

TEST(SolveViaLift, ExactWithinFactorTwo) {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const auto ri = fixtures::random_monotone_instance(seed, 7, 4);
    const SolveReport lifted = solve_via_lift(ri.inst, exact_ma_solver());
    const double opt = brute_force_kway(ri.inst).objective;
    require_kway_feasible(ri.inst, lifted.blocks);
    EXPECT_LE(lifted.objective, 2 * opt + 1e-9) << seed;
    ASSERT_TRUE(lifted.ma_objective && lifted.matching_cost);
    EXPECT_LE(lifted.objective, *lifted.ma_objective + *lifted.matching_cost + 1e-9);
  }
}

TEST(SolveViaLift, TrivialSolverMatchesAlgorithm1Shape) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + t % 6;
    const ValueOracle f = fixtures::random_monotone_function(n, rng);
    const std::size_t k = 2 + t % std::min<std::size_t>(3, n - 1);
    const auto inst = whole(f, k);
    const SolveReport lifted = solve_via_lift(inst, trivial_ma_solver(), "lift-trivial");
    const double opt = brute_force_kway(inst).objective;
    EXPECT_LE(lifted.objective, 2 * opt + 1e-9);
    EXPECT_LE(objective(inst, algorithm1(f, k).blocks), 2 * opt + 1e-9);
    // k-1 singletons plus one block holding everything else
    std::size_t singletons = 0;
    for (const auto& b : lifted.blocks) singletons += b.size() == 1;
    EXPECT_GE(singletons, k - 1);
  }
}

TEST(SolveViaLift, VertexCoverPath) {
  const auto inst = MultiAgentInstance::shared(make_cardinality(3), 2, make_family(family::VertexCover{kPath}, 3));
  const SolveReport ma = brute_force_ma(inst);
  EXPECT_EQ(ma.objective, 1.0);
  EXPECT_EQ(ma.blocks[0] | ma.blocks[1], ElementSet::from_indices(3, {1}));
  const SolveReport lifted = solve_via_lift(inst, exact_ma_solver(), "lift-exact");
  EXPECT_EQ(lifted.objective, 2.0);
  EXPECT_EQ(brute_force_kway(inst).objective, 2.0);
}

TEST(SingleAgent, Examples) {
  const SingleAgentResult a = single_agent_exact_min(make_cardinality(3), make_family(family::VertexCover{kPath}, 3));
  EXPECT_EQ(a.set, ElementSet::from_indices(3, {1}));
  EXPECT_EQ(a.value, 1.0);

  const ValueOracle f = make_truncated_cardinality(5, 3);
  const SingleAgentResult b = single_agent_exact_min(f, make_family(family::WholeSet{}, 5));
  EXPECT_EQ(b.set, ElementSet::full(5));
  EXPECT_EQ(b.value, 3.0);

  const SingleAgentResult c =
      single_agent_exact_min(make_graph_functions(kTriangle).monotone_proxy, make_family(family::CardinalityAtLeast{1}, 3));
  EXPECT_EQ(c.set.size(), 1u);
  EXPECT_EQ(c.value, 2.0);
}

TEST(SingleAgent, EmptyFamilyIsInfeasible) {
  EXPECT_THROW(single_agent_exact_min(make_cardinality(3), make_family(family::CardinalityAtLeast{4}, 3)), Error);
}

TEST(Registry, NamesAndErrors) {
  const auto& names = solver_names();
  for (const char* want : {"algorithm1", "greedy-split", "lift-exact", "lift-trivial", "exact"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  }
  const auto inst = whole(make_cardinality(4), 2);
  try {
    run_solver("nope", inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InputError);
  }
  try {
    run_solver("algorithm1", whole(make_cardinality(2), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
  const auto per_agent = MultiAgentInstance::per_agent({make_cardinality(4), make_cardinality(4)},
                                                       make_family(family::WholeSet{}, 4));
  try {
    run_solver("algorithm1", per_agent);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContractError);
  }
}

TEST(Registry, ReportsAreFeasibleAndCounted) {
  const auto ri = fixtures::random_monotone_instance(7, 6, 3);
  for (const auto& name : {"lift-exact", "lift-trivial", "exact"}) {
    const SolveReport r = run_solver(name, ri.inst);
    require_kway_feasible(ri.inst, r.blocks);
    EXPECT_NEAR(r.objective, objective(ri.inst, r.blocks), 1e-9);
    EXPECT_GT(r.oracle_queries, 0u);
    EXPECT_EQ(r.solver, name);
  }
  const SolveReport a1 = run_solver("algorithm1", whole(make_truncated_cardinality(6, 2), 3));
  EXPECT_EQ(a1.oracle_queries, 6u);
}
