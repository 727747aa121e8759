#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subkmp/exact.hpp"
#include "subkmp/instance.hpp"
#include "subkmp/zoo.hpp"

namespace subkmp {

enum class GapKind { Symmetric, Monotone };

std::string to_string(GapKind kind);

/// Explicit beta, or the asymptotic policy HardnessParams::policy_beta.
struct BetaChoice {
  std::optional<std::int64_t> explicit_beta;
};

/// Explicit R, or R drawn with draw_half_set(n, seed).
struct RChoice {
  std::optional<ElementSet> explicit_r;
  std::uint64_t seed = 0;
};

struct GapInstance {
  GapKind kind = GapKind::Symmetric;
  ValueOracle easy;  // f1 or f3
  ValueOracle hard;  // f2 or f4
  std::size_t k = 0;  // n/2 + 1
  HardnessParams params;
};

GapInstance make_gap_instance(GapKind kind, std::size_t n, const BetaChoice& beta, const RChoice& r);

enum class GapMode { Exhaustive, Constructive };

struct GapReport {
  GapKind kind = GapKind::Symmetric;
  HardnessParams params;
  std::size_t k = 0;
  GapMode mode = GapMode::Constructive;
  HalfInteger value_easy;  // every feasible partition attains this on the easy side
  HalfInteger value_hard;  // OPT (exhaustive) or witness value (constructive)
  HalfInteger hard_bound;  // beta or beta + n/2
  LabeledPartition witness;
  double ratio = 0;
  double ratio_bound = 0;  // 2/(1+eps) or 4/(3+eps)
  std::uint64_t partitions_checked = 0;
};

/// Exhaustive mode enumerates every feasible partition and checks that the
/// easy side is constant at n/2 (symmetric) or n (monotone) and that the
/// hard optimum is at most beta (resp. beta + n/2). Constructive mode only
/// evaluates the planted witness (R-bar, {r_1}, ..., {r_{n/2}}). Violations
/// throw InvariantViolation naming the offending partition.
GapReport run_gap_experiment(GapKind kind, std::size_t n, const BetaChoice& beta, const RChoice& r, GapMode mode,
                             EnumerationBudget budget = {});

struct IndependentHalf {};
struct UniformSize {
  std::size_t m = 0;
};
using QueryDistribution = std::variant<IndependentHalf, UniformSize>;

std::string describe(const QueryDistribution& dist);

struct DistinguishReport {
  GapKind kind = GapKind::Symmetric;
  HardnessParams params;
  std::uint64_t seed = 0;
  std::string distribution;
  std::uint64_t num_queries = 0;
  std::uint64_t distinguished = 0;
  double fraction = 0;
  /// Samples on which (f3 != f4) disagreed with (f1 != f2); always expected 0.
  std::uint64_t equivalence_failures = 0;
  std::uint64_t ledger_count = 0;
};

inline constexpr double kDefaultDistinguishThreshold = 0.01;
inline constexpr std::size_t kDistinguishBatch = 4096;

/// Samples num_queries sets and counts those where the easy and hard oracles
/// differ. Batches use sub-seeds derived from `seed`, so results do not
/// depend on the number of worker threads.
DistinguishReport distinguishability_experiment(GapKind kind, std::size_t n, const BetaChoice& beta,
                                                const RChoice& r, std::uint64_t num_queries,
                                                const QueryDistribution& dist);

struct DistinguishTrend {
  std::vector<DistinguishReport> reports;
  bool non_increasing = true;
};

/// Report-only trend over a grid of n under the beta policy.
DistinguishTrend distinguishability_trend(GapKind kind, const std::vector<std::size_t>& ns, std::uint64_t seed,
                                          std::uint64_t num_queries);

// --- multi-agent optimum as a bad seed ---------------------------------------

struct LiftGapAnalysis {
  double ma_opt = 0;         // 2(k-1), attained by (T, {}, ..., {})
  double kway_opt = 0;       // (2+eps)(k-1)
  double split_bound = 0;    // (M+1)(k-1)
  double gap = 0;            // (M+1)/(2+eps)
};

struct LiftGapInstance {
  MultiAgentInstance inst;
  ElementSet t;  // {0, ..., 2(k-1)-1}
  double big_m = 0;
  double eps = 0;
  LiftGapAnalysis analysis;
};

/// Agent 0 has f(S) = |S|, the others the modular weight 1+eps outside T and M
/// inside; the family is {S : |S| >= 2(k-1)}. Requires k >= 2 and n >= 3(k-1).
LiftGapInstance lift_gap_counterexample(std::size_t k, double big_m, double eps, std::size_t n);

struct LiftGapVerification {
  SolveReport ma;
  SolveReport kway;
  /// Cheapest feasible k-way partition in which every agent other than agent 0 holds an element of T.
  double min_split_cost = 0;
  std::uint64_t split_partitions = 0;
};

LiftGapVerification verify_lift_gap(const LiftGapInstance& cx, EnumerationBudget budget = {});

}  // namespace subkmp
