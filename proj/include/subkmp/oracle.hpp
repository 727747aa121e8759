#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subkmp/element_set.hpp"
#include "subkmp/half_integer.hpp"

namespace subkmp {

/// Structural claims an oracle makes about itself. Claims are checked by
/// check_properties, never assumed to hold.
struct OracleFlags {
  bool monotone = false;
  bool symmetric = false;
  bool submodular = false;
  bool nonnegative = false;
};

/// Counts evaluations routed through a wrapped oracle.
///
/// The counter is atomic. The (set, value) log is capped; counting continues
/// past the cap.
class QueryLedger {
 public:
  static constexpr std::size_t kDefaultLogCap = 10'000;

  explicit QueryLedger(std::size_t log_cap = kDefaultLogCap) : log_cap_(log_cap) {}

  std::uint64_t count() const noexcept { return count_.load(std::memory_order_relaxed); }
  std::size_t log_cap() const noexcept { return log_cap_; }
  std::vector<std::pair<ElementSet, double>> log() const;
  void reset();

  void record(const ElementSet& s, double value);

 private:
  std::atomic<std::uint64_t> count_{0};
  std::size_t log_cap_;
  mutable std::mutex log_mutex_;
  std::vector<std::pair<ElementSet, double>> log_;
};

/// A set function over {0, ..., n-1} with value-oracle access.
///
/// Cheap to copy: the evaluator is shared. Oracles built from cardinality
/// formulas also carry an exact half-integer evaluator.
class ValueOracle {
 public:
  using Evaluator = std::function<double(const ElementSet&)>;
  using ExactEvaluator = std::function<HalfInteger(const ElementSet&)>;

  ValueOracle() = default;
  ValueOracle(std::size_t n, std::string name, OracleFlags flags, Evaluator eval);
  /// Exact oracle; the floating-point value is derived from the exact one.
  ValueOracle(std::size_t n, std::string name, OracleFlags flags, ExactEvaluator exact);

  std::size_t ground_size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  const OracleFlags& flags() const noexcept { return flags_; }
  bool is_exact() const noexcept { return static_cast<bool>(exact_); }
  const std::shared_ptr<QueryLedger>& ledger() const noexcept { return ledger_; }

  /// Throws IndexOutOfRange when s is over a different ground set.
  double operator()(const ElementSet& s) const;
  /// Throws ContractError when the oracle has no exact mode.
  HalfInteger exact(const ElementSet& s) const;

  ValueOracle with_flags(OracleFlags flags) const;
  ValueOracle renamed(std::string name) const;

 private:
  friend ValueOracle wrap_counting(const ValueOracle&, std::shared_ptr<QueryLedger>);

  void check_ground(const ElementSet& s) const;

  std::size_t n_ = 0;
  std::string name_;
  OracleFlags flags_;
  std::shared_ptr<const Evaluator> eval_;
  std::shared_ptr<const ExactEvaluator> exact_;
  std::shared_ptr<QueryLedger> ledger_;
};

double evaluate(const ValueOracle& oracle, const ElementSet& s);

/// Returns a value-identical oracle whose evaluations are recorded in `ledger`.
ValueOracle wrap_counting(const ValueOracle& oracle, std::shared_ptr<QueryLedger> ledger);
std::pair<ValueOracle, std::shared_ptr<QueryLedger>> wrap_counting(const ValueOracle& oracle);

/// Absolute tolerance for floating-point comparisons; exact oracles compare with zero tolerance.
inline constexpr double kTolerance = 1e-9;

}  // namespace subkmp
