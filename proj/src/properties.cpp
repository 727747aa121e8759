#include "subkmp/properties.hpp"

#include <cmath>
#include <random>

#include "subkmp/error.hpp"

namespace subkmp {

bool PropertyReport::claims_confirmed() const {
  return (!claimed.submodular || submodular.holds) && (!claimed.monotone || monotone.holds) &&
         (!claimed.symmetric || symmetric.holds) && (!claimed.nonnegative || nonnegative.holds);
}

double submodularity_slack(const ValueOracle& oracle, const ElementSet& a, const ElementSet& b, Element v) {
  ElementSet av = a;
  av.insert(v);
  ElementSet bv = b;
  bv.insert(v);
  return (oracle(av) - oracle(a)) - (oracle(bv) - oracle(b));
}

namespace {

// Next submask of `set` after `sub` in increasing numeric order.
std::uint64_t next_submask(std::uint64_t sub, std::uint64_t set) { return ((sub | ~set) + 1) & set; }

void check_exhaustive(const ValueOracle& oracle, const Exhaustive& mode, PropertyReport& report) {
  const std::size_t n = oracle.ground_size();
  if (n > mode.max_n || n > 30) {
    fail(ErrorCode::BudgetExceeded, "exhaustive property check limited to n <= " + std::to_string(mode.max_n) +
                                        ", got n = " + std::to_string(n));
  }
  const double tol = oracle.is_exact() ? 0.0 : kTolerance;
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t full = count - 1;
  std::vector<double> f(count);
  for (std::uint64_t s = 0; s < count; ++s) f[s] = oracle(ElementSet::from_mask(n, s));
  report.evaluations = count;
  auto set = [n](std::uint64_t m) { return ElementSet::from_mask(n, m); };

  for (std::uint64_t s = 0; s < count && report.nonnegative.holds; ++s) {
    if (f[s] < -tol) report.nonnegative = {false, SetWitness{set(s)}};
  }

  // Proper non-empty sets first, then the empty set (equivalently V).
  for (std::uint64_t s = 1; s <= count && report.symmetric.holds; ++s) {
    const std::uint64_t m = s == count ? 0 : s;
    if (m == full && count > 1) continue;
    if (std::fabs(f[m] - f[full & ~m]) > tol) report.symmetric = {false, SetWitness{set(m)}};
  }

  for (std::uint64_t s = 0; s < count && report.monotone.holds; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (s & bit) continue;
      if (f[s] > f[s | bit] + tol) {
        report.monotone = {false, MonotonicityWitness{set(s), set(s | bit)}};
        break;
      }
    }
  }

  auto scan = [&](bool nonempty_a) {
    for (std::size_t vi = n; vi-- > 0;) {
      const std::uint64_t bit = std::uint64_t{1} << vi;
      const std::uint64_t rest = full & ~bit;
      for (std::uint64_t b = 0;; b = next_submask(b, rest)) {
        const double mb = f[b | bit] - f[b];
        if (nonempty_a) {
          for (std::uint64_t a = next_submask(0, b); a != 0; a = next_submask(a, b)) {
            const double ma = f[a | bit] - f[a];
            if (ma < mb - tol) {
              report.submodular = {false, SubmodularityWitness{set(a), set(b), static_cast<Element>(vi), ma, mb}};
              return;
            }
          }
        } else {
          const double ma = f[bit] - f[0];
          if (ma < mb - tol) {
            report.submodular = {false, SubmodularityWitness{set(0), set(b), static_cast<Element>(vi), ma, mb}};
            return;
          }
        }
        if (b == rest) break;
      }
    }
  };
  scan(true);
  if (report.submodular.holds) scan(false);
}

void check_randomized(const ValueOracle& oracle, const Randomized& mode, PropertyReport& report) {
  const std::size_t n = oracle.ground_size();
  const double tol = oracle.is_exact() ? 0.0 : kTolerance;
  std::mt19937_64 rng(mode.seed);
  std::uint64_t evals = 0;
  auto f = [&](const ElementSet& s) {
    ++evals;
    return oracle(s);
  };
  auto random_set = [&] {
    ElementSet s(n);
    for (std::size_t v = 0; v < n; ++v)
      if (rng() & 1U) s.insert(static_cast<Element>(v));
    return s;
  };

  for (std::size_t t = 0; t < mode.trials; ++t) {
    if (report.nonnegative.holds) {
      ElementSet s = random_set();
      if (f(s) < -tol) report.nonnegative = {false, SetWitness{s}};
    }
    if (report.symmetric.holds) {
      ElementSet s = random_set();
      if (std::fabs(f(s) - f(s.complement())) > tol) report.symmetric = {false, SetWitness{s}};
    }
    // Each element lands in A, B \ A or outside B with equal probability.
    ElementSet a(n), b(n);
    std::vector<Element> outside;
    for (std::size_t v = 0; v < n; ++v) {
      const auto e = static_cast<Element>(v);
      switch (rng() % 3) {
        case 0:
          a.insert(e);
          b.insert(e);
          break;
        case 1:
          b.insert(e);
          break;
        default:
          outside.push_back(e);
      }
    }
    if (report.monotone.holds && f(a) > f(b) + tol) report.monotone = {false, MonotonicityWitness{a, b}};
    if (report.submodular.holds && !outside.empty()) {
      const Element v = outside[rng() % outside.size()];
      ElementSet av = a, bv = b;
      av.insert(v);
      bv.insert(v);
      const double ma = f(av) - f(a);
      const double mb = f(bv) - f(b);
      if (ma < mb - tol) report.submodular = {false, SubmodularityWitness{a, b, v, ma, mb}};
    }
  }
  report.evaluations = evals;
}

}  // namespace

PropertyReport check_properties(const ValueOracle& oracle, const CheckMode& mode) {
  PropertyReport report;
  report.oracle_name = oracle.name();
  report.claimed = oracle.flags();
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    report.exhaustive = true;
    check_exhaustive(oracle, *ex, report);
  } else {
    report.exhaustive = false;
    check_randomized(oracle, std::get<Randomized>(mode), report);
  }
  return report;
}

}  // namespace subkmp
