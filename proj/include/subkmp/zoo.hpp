#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subkmp/element_set.hpp"
#include "subkmp/oracle.hpp"

namespace subkmp {

struct Edge {
  Element u = 0;
  Element v = 0;
  double weight = 1.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph; parallel edges are allowed and their weights add.
struct GraphSpec {
  std::size_t n_vertices = 0;
  std::vector<Edge> edges;

  /// Throws InputError on self-loops, out-of-range endpoints or negative weights.
  void validate() const;
  double total_weight() const;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct Hyperedge {
  std::vector<Element> vertices;
  double weight = 1.0;
  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

struct HypergraphSpec {
  std::size_t n_vertices = 0;
  std::vector<Hyperedge> hyperedges;

  void validate() const;
  friend bool operator==(const HypergraphSpec&, const HypergraphSpec&) = default;
};

ValueOracle make_modular(std::span<const double> weights);
ValueOracle make_truncated_cardinality(std::size_t n, std::size_t cap);
/// |S|; exact.
ValueOracle make_cardinality(std::size_t n);

struct GraphFunctions {
  ValueOracle delta;           // weight of edges crossing S
  ValueOracle internal;        // weight of edges inside S
  ValueOracle monotone_proxy;  // delta + internal
};

GraphFunctions make_graph_functions(const GraphSpec& g);

/// Weight of hyperedges with endpoints both inside and outside S.
ValueOracle make_hypergraph_cut(const HypergraphSpec& hg);

/// f(S) - offset. The shifted view claims nothing beyond submodularity/monotonicity of the base.
ValueOracle make_shifted(const ValueOracle& base, double offset);

// --- hardness functions ----------------------------------------------------

enum class HardnessKind { F1, F2, F3, F4 };

std::string to_string(HardnessKind kind);

/// Parameters of the hardness construction: even n, |R| = n/2 and an
/// integer threshold beta = (n/4)(1 + epsilon) with n/4 < beta < n/2.
struct HardnessParams {
  std::size_t n = 0;
  ElementSet r;
  std::int64_t beta = 0;
  /// Always 4*beta/n - 1.
  double epsilon = 0;
  /// Seed used to draw R, if it was drawn.
  std::optional<std::uint64_t> r_seed;

  /// Throws InputError naming the violated invariant.
  void validate() const;

  static HardnessParams with_beta(std::size_t n, ElementSet r, std::int64_t beta);
  /// beta = round((n/4)(1 + sqrt(ln^2 n / n))).
  static std::int64_t policy_beta(std::size_t n);
};

/// Uniform n/2-subset of {0..n-1} drawn from a seeded mt19937_64.
ElementSet draw_half_set(std::size_t n, std::uint64_t seed);

/// f1/f2 are symmetric, f3/f4 monotone; all exact, submodular and non-negative.
ValueOracle make_hardness(HardnessKind kind, const HardnessParams& params);

}  // namespace subkmp
