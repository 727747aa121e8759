#include "subkmp/hardness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "subkmp/error.hpp"

namespace subkmp {

std::string to_string(GapKind kind) { return kind == GapKind::Symmetric ? "sym" : "mon"; }

GapInstance make_gap_instance(GapKind kind, std::size_t n, const BetaChoice& beta, const RChoice& r) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::InputError, "gap instances need an even n >= 2, got " + std::to_string(n));
  const std::int64_t b = beta.explicit_beta ? *beta.explicit_beta : HardnessParams::policy_beta(n);
  const auto nn = static_cast<std::int64_t>(n);
  if (!beta.explicit_beta && (4 * b <= nn || 2 * b >= nn)) {
    fail(ErrorCode::InputError, "beta policy gives beta = " + std::to_string(b) + " for n = " + std::to_string(n) +
                                    ", outside (n/4, n/2); pass an explicit beta");
  }
  ElementSet rset = r.explicit_r ? *r.explicit_r : draw_half_set(n, r.seed);
  GapInstance out;
  out.kind = kind;
  out.params = HardnessParams::with_beta(n, std::move(rset), b);
  if (!r.explicit_r) out.params.r_seed = r.seed;
  out.k = n / 2 + 1;
  const bool sym = kind == GapKind::Symmetric;
  out.easy = make_hardness(sym ? HardnessKind::F1 : HardnessKind::F3, out.params);
  out.hard = make_hardness(sym ? HardnessKind::F2 : HardnessKind::F4, out.params);
  return out;
}

namespace {

HalfInteger exact_sum(const ValueOracle& f, std::span<const ElementSet> blocks) {
  HalfInteger sum;
  for (const auto& b : blocks) sum += f.exact(b);
  return sum;
}

}  // namespace

GapReport run_gap_experiment(GapKind kind, std::size_t n, const BetaChoice& beta, const RChoice& r, GapMode mode,
                             EnumerationBudget budget) {
  const GapInstance gap = make_gap_instance(kind, n, beta, r);
  const bool sym = kind == GapKind::Symmetric;
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t b = gap.params.beta;

  GapReport report;
  report.kind = kind;
  report.params = gap.params;
  report.k = gap.k;
  report.mode = mode;
  const HalfInteger easy_target = HalfInteger::from_int(sym ? nn / 2 : nn);
  report.hard_bound = HalfInteger::from_int(sym ? b : b + nn / 2);
  report.ratio_bound = sym ? 2.0 / (1.0 + gap.params.epsilon) : 4.0 / (3.0 + gap.params.epsilon);

  auto check_blocks = [&](std::span<const ElementSet> blocks) {
    for (const auto& block : blocks) {
      if (block.size() > n / 2) {
        fail(ErrorCode::InvariantViolation,
             "block larger than n/2 in feasible partition " + blocks_to_string(blocks));
      }
    }
  };

  if (mode == GapMode::Exhaustive) {
    bool found = false;
    report.partitions_checked = enumerate_labeled_partitions(
        n, gap.k,
        [&](std::span<const ElementSet> blocks) {
          check_blocks(blocks);
          const HalfInteger easy = exact_sum(gap.easy, blocks);
          if (easy != easy_target) {
            fail(ErrorCode::InvariantViolation, "easy side is " + easy.to_string() + ", expected " +
                                                    easy_target.to_string() + " on " + blocks_to_string(blocks));
          }
          const HalfInteger hard = exact_sum(gap.hard, blocks);
          if (!found || hard < report.value_hard) {
            found = true;
            report.value_hard = hard;
            report.witness.blocks.assign(blocks.begin(), blocks.end());
          }
        },
        budget);
    report.value_easy = easy_target;
  } else {
    const ElementSet& rset = gap.params.r;
    report.witness.blocks.push_back(rset.complement());
    rset.for_each([&](Element v) { report.witness.blocks.push_back(ElementSet::from_indices(n, {v})); });
    check_blocks(report.witness.blocks);
    report.value_easy = exact_sum(gap.easy, report.witness.blocks);
    report.value_hard = exact_sum(gap.hard, report.witness.blocks);
    report.partitions_checked = 1;
    if (report.value_easy != easy_target) {
      fail(ErrorCode::InvariantViolation, "easy side of the witness is " + report.value_easy.to_string() +
                                              ", expected " + easy_target.to_string());
    }
    if (report.value_hard != report.hard_bound) {
      fail(ErrorCode::InvariantViolation, "witness evaluates to " + report.value_hard.to_string() +
                                              ", expected exactly " + report.hard_bound.to_string());
    }
  }

  if (report.value_hard > report.hard_bound) {
    fail(ErrorCode::InvariantViolation, "hard-side optimum " + report.value_hard.to_string() + " exceeds bound " +
                                            report.hard_bound.to_string());
  }
  const std::int64_t easy_h = report.value_easy.halves();
  const std::int64_t hard_h = report.value_hard.halves();
  // easy/hard >= n/(2 beta) (symmetric) or 2n/(n + 2 beta) (monotone), in integers.
  const bool ratio_ok = sym ? easy_h * 2 * b >= nn * hard_h : easy_h * (nn + 2 * b) >= 2 * nn * hard_h;
  if (!ratio_ok) fail(ErrorCode::InvariantViolation, "gap ratio below the guaranteed bound");
  report.ratio = hard_h == 0 ? std::numeric_limits<double>::infinity()
                             : static_cast<double>(easy_h) / static_cast<double>(hard_h);
  return report;
}

std::string describe(const QueryDistribution& dist) {
  if (std::holds_alternative<IndependentHalf>(dist)) return "p-half";
  return "size:" + std::to_string(std::get<UniformSize>(dist).m);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % range;
}

ElementSet sample_set(std::mt19937_64& rng, std::size_t n, const QueryDistribution& dist) {
  if (std::holds_alternative<IndependentHalf>(dist)) {
    std::vector<Element> members;
    std::uint64_t bits = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v % 64 == 0) bits = rng();
      if ((bits >> (v % 64)) & 1U) members.push_back(static_cast<Element>(v));
    }
    return ElementSet::from_indices(n, members);
  }
  const std::size_t m = std::get<UniformSize>(dist).m;
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  for (std::size_t i = 0; i < m; ++i) std::swap(perm[i], perm[i + bounded(rng, n - i)]);
  return ElementSet::from_indices(n, std::span<const Element>(perm.data(), m));
}

}  // namespace

DistinguishReport distinguishability_experiment(GapKind kind, std::size_t n, const BetaChoice& beta,
                                                const RChoice& r, std::uint64_t num_queries,
                                                const QueryDistribution& dist) {
  if (const auto* size = std::get_if<UniformSize>(&dist); size && size->m > n)
    fail(ErrorCode::InputError, "query size exceeds n");
  const GapInstance sym = make_gap_instance(GapKind::Symmetric, n, beta, r);
  const HardnessParams& params = sym.params;
  auto ledger = std::make_shared<QueryLedger>();
  const ValueOracle f1 = wrap_counting(sym.easy, ledger);
  const ValueOracle f2 = wrap_counting(sym.hard, ledger);
  const ValueOracle f3 = wrap_counting(make_hardness(HardnessKind::F3, params), ledger);
  const ValueOracle f4 = wrap_counting(make_hardness(HardnessKind::F4, params), ledger);

  const std::uint64_t batches = (num_queries + kDistinguishBatch - 1) / kDistinguishBatch;
  struct BatchResult {
    std::uint64_t distinguished = 0;
    std::uint64_t failures = 0;
  };
  std::vector<BatchResult> results(batches);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < batches; b = next++) {
      std::mt19937_64 rng(splitmix64(r.seed ^ splitmix64(b)));
      const std::uint64_t first = b * kDistinguishBatch;
      const std::uint64_t count = std::min<std::uint64_t>(kDistinguishBatch, num_queries - first);
      for (std::uint64_t q = 0; q < count; ++q) {
        const ElementSet s = sample_set(rng, n, dist);
        const bool sym_differs = f1.exact(s) != f2.exact(s);
        const bool mon_differs = f3.exact(s) != f4.exact(s);
        if (sym_differs != mon_differs) ++results[b].failures;
        if (kind == GapKind::Symmetric ? sym_differs : mon_differs) ++results[b].distinguished;
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(), batches));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  DistinguishReport report;
  report.kind = kind;
  report.params = params;
  report.seed = r.seed;
  report.distribution = describe(dist);
  report.num_queries = num_queries;
  for (const auto& res : results) {
    report.distinguished += res.distinguished;
    report.equivalence_failures += res.failures;
  }
  report.fraction =
      num_queries == 0 ? 0.0 : static_cast<double>(report.distinguished) / static_cast<double>(num_queries);
  report.ledger_count = ledger->count();
  return report;
}

DistinguishTrend distinguishability_trend(GapKind kind, const std::vector<std::size_t>& ns, std::uint64_t seed,
                                          std::uint64_t num_queries) {
  DistinguishTrend trend;
  for (std::size_t n : ns) {
    trend.reports.push_back(distinguishability_experiment(kind, n, {}, RChoice{std::nullopt, seed}, num_queries,
                                                          IndependentHalf{}));
    if (trend.reports.size() > 1 &&
        trend.reports.back().fraction > trend.reports[trend.reports.size() - 2].fraction) {
      trend.non_increasing = false;
    }
  }
  return trend;
}

LiftGapInstance lift_gap_counterexample(std::size_t k, double big_m, double eps, std::size_t n) {
  if (k < 2) fail(ErrorCode::InputError, "the counterexample needs k >= 2");
  if (n < 3 * (k - 1)) fail(ErrorCode::InputError, "need n >= 3(k-1) so that V \\ T can host k-1 singletons");
  if (!(eps > 0) || !(big_m > 0)) fail(ErrorCode::InputError, "M and eps must be positive");
  const std::size_t t_size = 2 * (k - 1);

  LiftGapInstance out;
  out.big_m = big_m;
  out.eps = eps;
  out.t = ElementSet(n);
  for (std::size_t v = 0; v < t_size; ++v) out.t.insert(static_cast<Element>(v));
  std::vector<double> w(n, 1.0 + eps);
  for (std::size_t v = 0; v < t_size; ++v) w[v] = big_m;

  std::vector<ValueOracle> functions{make_cardinality(n)};
  const ValueOracle modular = make_modular(w);
  for (std::size_t i = 1; i < k; ++i) functions.push_back(modular);
  out.inst = MultiAgentInstance::per_agent(std::move(functions), make_family(family::CardinalityAtLeast{t_size}, n));

  const double km1 = static_cast<double>(k - 1);
  out.analysis.ma_opt = 2.0 * km1;
  out.analysis.kway_opt = (2.0 + eps) * km1;
  out.analysis.split_bound = (big_m + 1.0) * km1;
  out.analysis.gap = (big_m + 1.0) / (2.0 + eps);
  return out;
}

LiftGapVerification verify_lift_gap(const LiftGapInstance& cx, EnumerationBudget budget) {
  LiftGapVerification out;
  out.ma = brute_force_ma(cx.inst, budget);
  out.kway = brute_force_kway(cx.inst, budget);
  out.min_split_cost = std::numeric_limits<double>::infinity();
  enumerate_kway_solutions(
      cx.inst,
      [&](std::span<const ElementSet> blocks) {
        for (std::size_t i = 1; i < blocks.size(); ++i)
          if (!blocks[i].intersects(cx.t)) return;
        ++out.split_partitions;
        out.min_split_cost = std::min(out.min_split_cost, objective(cx.inst, blocks));
      },
      budget);
  return out;
}

}  // namespace subkmp
