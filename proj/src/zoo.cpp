#include "subkmp/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <random>

#include "subkmp/error.hpp"

namespace subkmp {

void GraphSpec::validate() const {
  if (n_vertices == 0) fail(ErrorCode::InputError, "graph must have at least one vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.u >= n_vertices || e.v >= n_vertices) fail(ErrorCode::InputError, where + "vertex index out of range");
    if (e.u == e.v) fail(ErrorCode::InputError, where + "self-loop");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) fail(ErrorCode::InputError, where + "negative weight");
  }
}

double GraphSpec::total_weight() const {
  return std::accumulate(edges.begin(), edges.end(), 0.0, [](double acc, const Edge& e) { return acc + e.weight; });
}

void HypergraphSpec::validate() const {
  if (n_vertices == 0) fail(ErrorCode::InputError, "hypergraph must have at least one vertex");
  for (std::size_t i = 0; i < hyperedges.size(); ++i) {
    const Hyperedge& e = hyperedges[i];
    const std::string where = "hyperedge " + std::to_string(i) + ": ";
    if (e.vertices.empty()) fail(ErrorCode::InputError, where + "empty hyperedge");
    for (Element v : e.vertices)
      if (v >= n_vertices) fail(ErrorCode::InputError, where + "vertex index out of range");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) fail(ErrorCode::InputError, where + "negative weight");
  }
}

ValueOracle make_modular(std::span<const double> weights) {
  if (weights.empty()) fail(ErrorCode::InputError, "modular function needs at least one weight");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w)) fail(ErrorCode::InputError, "modular weights must be non-negative");
  std::vector<double> w(weights.begin(), weights.end());
  const std::size_t n = w.size();
  return ValueOracle(n, "modular", OracleFlags{.monotone = true, .submodular = true, .nonnegative = true},
                     ValueOracle::Evaluator([w = std::move(w)](const ElementSet& s) {
                       double sum = 0;
                       s.for_each([&](Element v) { sum += w[v]; });
                       return sum;
                     }));
}

ValueOracle make_truncated_cardinality(std::size_t n, std::size_t cap) {
  if (n == 0) fail(ErrorCode::InputError, "ground set must be non-empty");
  if (cap > n) fail(ErrorCode::InputError, "truncation cap exceeds n");
  return ValueOracle(n, "truncated-cardinality(" + std::to_string(cap) + ")",
                     OracleFlags{.monotone = true, .submodular = true, .nonnegative = true},
                     ValueOracle::ExactEvaluator([cap](const ElementSet& s) {
                       return HalfInteger::from_int(static_cast<std::int64_t>(std::min(s.size(), cap)));
                     }));
}

ValueOracle make_cardinality(std::size_t n) { return make_truncated_cardinality(n, n).renamed("cardinality"); }

GraphFunctions make_graph_functions(const GraphSpec& g) {
  g.validate();
  const auto graph = std::make_shared<const GraphSpec>(g);
  // Sums edge weights by how many endpoints fall in S.
  auto tally = [graph](const ElementSet& s, int want) {
    double sum = 0;
    for (const Edge& e : graph->edges) {
      const int inside = static_cast<int>(s.contains(e.u)) + static_cast<int>(s.contains(e.v));
      if (inside == want || (want == 3 && inside > 0)) sum += e.weight;
    }
    return sum;
  };
  const std::size_t n = g.n_vertices;
  GraphFunctions out;
  out.delta = ValueOracle(n, "graph-cut",
                          OracleFlags{.symmetric = true, .submodular = true, .nonnegative = true},
                          ValueOracle::Evaluator([tally](const ElementSet& s) { return tally(s, 1); }));
  out.internal = ValueOracle(n, "graph-internal", OracleFlags{},
                             ValueOracle::Evaluator([tally](const ElementSet& s) { return tally(s, 2); }));
  out.monotone_proxy =
      ValueOracle(n, "graph-coverage", OracleFlags{.monotone = true, .submodular = true, .nonnegative = true},
                  ValueOracle::Evaluator([tally](const ElementSet& s) { return tally(s, 3); }));
  return out;
}

ValueOracle make_hypergraph_cut(const HypergraphSpec& hg) {
  hg.validate();
  const auto graph = std::make_shared<const HypergraphSpec>(hg);
  return ValueOracle(hg.n_vertices, "hypergraph-cut",
                     OracleFlags{.symmetric = true, .submodular = true, .nonnegative = true},
                     ValueOracle::Evaluator([graph](const ElementSet& s) {
                       double sum = 0;
                       for (const Hyperedge& e : graph->hyperedges) {
                         bool in = false, out = false;
                         for (Element v : e.vertices) (s.contains(v) ? in : out) = true;
                         if (in && out) sum += e.weight;
                       }
                       return sum;
                     }));
}

ValueOracle make_shifted(const ValueOracle& base, double offset) {
  OracleFlags flags = base.flags();
  flags.nonnegative = false;
  return ValueOracle(base.ground_size(), base.name() + "-shifted", flags,
                     ValueOracle::Evaluator([base, offset](const ElementSet& s) { return base(s) - offset; }));
}

std::string to_string(HardnessKind kind) {
  switch (kind) {
    case HardnessKind::F1:
      return "f1";
    case HardnessKind::F2:
      return "f2";
    case HardnessKind::F3:
      return "f3";
    case HardnessKind::F4:
      return "f4";
  }
  return "?";
}

void HardnessParams::validate() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::InputError, "invalid hardness parameters: " + what); };
  if (n < 2 || n % 2 != 0) bad("n must be even and positive (|R| = n/2), got n = " + std::to_string(n));
  if (r.ground_size() != n) bad("R must be a subset of the n-element ground set");
  if (r.size() != n / 2) bad("|R| must equal n/2, got |R| = " + std::to_string(r.size()));
  const auto nn = static_cast<std::int64_t>(n);
  if (4 * beta <= nn) bad("beta must exceed n/4 (epsilon > 0), got beta = " + std::to_string(beta));
  if (2 * beta >= nn) bad("beta must be below n/2, got beta = " + std::to_string(beta));
  if (epsilon != 4.0 * static_cast<double>(beta) / static_cast<double>(n) - 1.0)
    bad("beta = (n/4)(1 + epsilon) does not hold");
}

HardnessParams HardnessParams::with_beta(std::size_t n, ElementSet r, std::int64_t beta) {
  HardnessParams p;
  p.n = n;
  p.r = std::move(r);
  p.beta = beta;
  p.epsilon = n == 0 ? 0.0 : 4.0 * static_cast<double>(beta) / static_cast<double>(n) - 1.0;
  p.validate();
  return p;
}

std::int64_t HardnessParams::policy_beta(std::size_t n) {
  const double nd = static_cast<double>(n);
  const double eps = std::sqrt(std::log(nd) * std::log(nd) / nd);
  return static_cast<std::int64_t>(std::llround(nd / 4.0 * (1.0 + eps)));
}

ElementSet draw_half_set(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  for (std::size_t i = 0; i < n / 2; ++i) {
    // Unbiased index in [i, n) by rejection.
    const std::uint64_t range = n - i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    std::swap(perm[i], perm[i + x % range]);
  }
  return ElementSet::from_indices(n, std::span<const Element>(perm.data(), n / 2));
}

ValueOracle make_hardness(HardnessKind kind, const HardnessParams& params) {
  params.validate();
  const auto half = static_cast<std::int64_t>(params.n / 2);
  const std::int64_t beta = params.beta;
  const ElementSet r = params.r;
  const bool planted = kind == HardnessKind::F2 || kind == HardnessKind::F4;
  const bool shifted = kind == HardnessKind::F1 || kind == HardnessKind::F2;
  OracleFlags flags{.submodular = true, .nonnegative = true};
  (shifted ? flags.symmetric : flags.monotone) = true;
  std::string name = to_string(kind) + "(n=" + std::to_string(params.n);
  if (planted) name += ",beta=" + std::to_string(beta) + ",R=" + r.to_hex();
  name += ")";
  return ValueOracle(params.n, std::move(name), flags,
                     ValueOracle::ExactEvaluator([=](const ElementSet& s) {
                       const auto size = static_cast<std::int64_t>(s.size());
                       std::int64_t m = std::min(size, half);
                       if (planted) {
                         const auto in_r = static_cast<std::int64_t>(s.intersection_size(r));
                         m = std::min({m, beta + in_r, beta + (size - in_r)});
                       }
                       return HalfInteger::from_halves(2 * m - (shifted ? size : 0));
                     }));
}

}  // namespace subkmp
