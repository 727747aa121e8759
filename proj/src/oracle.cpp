#include "subkmp/oracle.hpp"

#include "subkmp/error.hpp"

namespace subkmp {

std::vector<std::pair<ElementSet, double>> QueryLedger::log() const {
  std::lock_guard lock(log_mutex_);
  return log_;
}

void QueryLedger::reset() {
  std::lock_guard lock(log_mutex_);
  count_.store(0, std::memory_order_relaxed);
  log_.clear();
}

void QueryLedger::record(const ElementSet& s, double value) {
  const std::uint64_t index = count_.fetch_add(1, std::memory_order_relaxed);
  if (index < log_cap_) {
    std::lock_guard lock(log_mutex_);
    if (log_.size() < log_cap_) log_.emplace_back(s, value);
  }
}

ValueOracle::ValueOracle(std::size_t n, std::string name, OracleFlags flags, Evaluator eval)
    : n_(n), name_(std::move(name)), flags_(flags), eval_(std::make_shared<const Evaluator>(std::move(eval))) {}

ValueOracle::ValueOracle(std::size_t n, std::string name, OracleFlags flags, ExactEvaluator exact)
    : n_(n), name_(std::move(name)), flags_(flags) {
  exact_ = std::make_shared<const ExactEvaluator>(std::move(exact));
  eval_ = std::make_shared<const Evaluator>([ex = exact_](const ElementSet& s) { return (*ex)(s).to_double(); });
}

void ValueOracle::check_ground(const ElementSet& s) const {
  if (!eval_) fail(ErrorCode::ContractError, "evaluation of an empty oracle");
  if (s.ground_size() != n_) {
    fail(ErrorCode::IndexOutOfRange, "set over a ground set of size " + std::to_string(s.ground_size()) +
                                         " passed to oracle '" + name_ + "' of size " + std::to_string(n_));
  }
}

double ValueOracle::operator()(const ElementSet& s) const {
  check_ground(s);
  return (*eval_)(s);
}

HalfInteger ValueOracle::exact(const ElementSet& s) const {
  check_ground(s);
  if (!exact_) fail(ErrorCode::ContractError, "oracle '" + name_ + "' has no exact mode");
  return (*exact_)(s);
}

ValueOracle ValueOracle::with_flags(OracleFlags flags) const {
  ValueOracle out = *this;
  out.flags_ = flags;
  return out;
}

ValueOracle ValueOracle::renamed(std::string name) const {
  ValueOracle out = *this;
  out.name_ = std::move(name);
  return out;
}

double evaluate(const ValueOracle& oracle, const ElementSet& s) { return oracle(s); }

ValueOracle wrap_counting(const ValueOracle& oracle, std::shared_ptr<QueryLedger> ledger) {
  ValueOracle out = oracle;
  out.ledger_ = ledger;
  out.eval_ = std::make_shared<const ValueOracle::Evaluator>([inner = oracle, ledger](const ElementSet& s) {
    const double v = inner(s);
    ledger->record(s, v);
    return v;
  });
  if (oracle.exact_) {
    out.exact_ =
        std::make_shared<const ValueOracle::ExactEvaluator>([inner = oracle, ledger](const ElementSet& s) {
          const HalfInteger v = inner.exact(s);
          ledger->record(s, v.to_double());
          return v;
        });
  }
  return out;
}

std::pair<ValueOracle, std::shared_ptr<QueryLedger>> wrap_counting(const ValueOracle& oracle) {
  auto ledger = std::make_shared<QueryLedger>();
  return {wrap_counting(oracle, ledger), ledger};
}

}  // namespace subkmp
