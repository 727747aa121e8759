#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "subkmp/element_set.hpp"
#include "subkmp/oracle.hpp"

namespace subkmp {

/// f(A + v) - f(A) < f(B + v) - f(B) with A subset of B, v outside B.
struct SubmodularityWitness {
  ElementSet a;
  ElementSet b;
  Element v = 0;
  double marginal_a = 0;
  double marginal_b = 0;
};

/// f(A) > f(B) with A subset of B.
struct MonotonicityWitness {
  ElementSet a;
  ElementSet b;
};

/// f(S) != f(V \ S), or f(S) < 0 for the non-negativity check.
struct SetWitness {
  ElementSet s;
};

template <typename Witness>
struct PropertyVerdict {
  bool holds = true;
  std::optional<Witness> witness;
};

struct PropertyReport {
  std::string oracle_name;
  OracleFlags claimed;
  PropertyVerdict<SubmodularityWitness> submodular;
  PropertyVerdict<MonotonicityWitness> monotone;
  PropertyVerdict<SetWitness> symmetric;
  PropertyVerdict<SetWitness> nonnegative;
  bool exhaustive = true;
  std::uint64_t evaluations = 0;

  /// True when every claimed flag was confirmed.
  bool claims_confirmed() const;
};

struct Exhaustive {
  std::size_t max_n = 14;
};

struct Randomized {
  std::size_t trials = 10'000;
  std::uint64_t seed = 0;
};

using CheckMode = std::variant<Exhaustive, Randomized>;

/// Checks all four structural properties of `oracle`.
///
/// Exhaustive mode tabulates f on all 2^n sets and then inspects every
/// triple A subset of B subset of V \ {v}; witnesses with non-empty A are
/// reported in preference to those with A empty. Throws BudgetExceeded
/// beyond Exhaustive::max_n.
PropertyReport check_properties(const ValueOracle& oracle, const CheckMode& mode = Exhaustive{});

/// f(A + v) - f(A) - (f(B + v) - f(B)); negative means a submodularity violation.
double submodularity_slack(const ValueOracle& oracle, const ElementSet& a, const ElementSet& b, Element v);

}  // namespace subkmp
