#pragma once
// Seeded random instances shared by the solver tests and the acceptance binary.
#include <random>
#include <vector>

#include "subkmp/family.hpp"
#include "subkmp/instance.hpp"
#include "subkmp/zoo.hpp"

namespace subkmp::fixtures {

inline GraphSpec random_graph(std::size_t n, std::mt19937_64& rng, double density = 0.5, bool integer_weights = true) {
  GraphSpec g{n, {}};
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> iw(1, 9);
  std::uniform_real_distribution<double> rw(0.1, 5.0);
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (keep(rng)) g.edges.push_back({u, v, integer_weights ? double(iw(rng)) : rw(rng)});
    }
  }
  return g;
}

// Graph with at least one edge, so its vertex-cover family is not all of 2^V.
inline GraphSpec random_nonempty_graph(std::size_t n, std::mt19937_64& rng) {
  GraphSpec g = random_graph(n, rng, 0.4);
  if (g.edges.empty()) g.edges.push_back({0, static_cast<Element>(n - 1), 1.0});
  return g;
}

// One of the monotone non-negative zoo functions. Hardness functions need even n >= 6.
inline ValueOracle random_monotone_function(std::size_t n, std::mt19937_64& rng) {
  const int choices = (n % 2 == 0 && n >= 6) ? 6 : 4;
  switch (std::uniform_int_distribution<int>(0, choices - 1)(rng)) {
    case 0: {
      std::vector<double> w(n);
      std::uniform_real_distribution<double> d(0.0, 10.0);
      for (auto& x : w) x = d(rng);
      return make_modular(w);
    }
    case 1:
      return make_truncated_cardinality(n, std::uniform_int_distribution<std::size_t>(1, n)(rng));
    case 2:
      return make_cardinality(n);
    case 3:
      return make_graph_functions(random_graph(n, rng, 0.5, false)).monotone_proxy;
    default: {
      const std::int64_t lo = static_cast<std::int64_t>(n / 4) + 1;
      const std::int64_t hi = static_cast<std::int64_t>((n + 1) / 2) - 1;
      const std::int64_t beta = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
      const auto params = HardnessParams::with_beta(n, draw_half_set(n, rng()), beta);
      return make_hardness(std::uniform_int_distribution<int>(0, 1)(rng) ? HardnessKind::F3 : HardnessKind::F4,
                           params);
    }
  }
}

inline FamilySpec random_upwards_closed_family(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return family::WholeSet{};
    case 1:
      return family::CardinalityAtLeast{std::uniform_int_distribution<std::size_t>(k, n)(rng)};
    default:
      return family::VertexCover{random_nonempty_graph(n, rng)};
  }
}

struct RandomInstance {
  MultiAgentInstance inst;
  std::uint64_t seed = 0;
};

// n in [3, max_n], k in [2, min(max_k, n)], shared or per-agent monotone functions, upwards-closed family.
inline RandomInstance random_monotone_instance(std::uint64_t seed, std::size_t max_n = 8, std::size_t max_k = 4) {
  std::mt19937_64 rng(seed);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min(max_k, n))(rng);
  FeasibleFamily fam = make_family(random_upwards_closed_family(n, k, rng), n);
  if (std::bernoulli_distribution(0.5)(rng)) {
    return {MultiAgentInstance::shared(random_monotone_function(n, rng), k, std::move(fam)), seed};
  }
  std::vector<ValueOracle> fs;
  for (std::size_t i = 0; i < k; ++i) fs.push_back(random_monotone_function(n, rng));
  return {MultiAgentInstance::per_agent(std::move(fs), std::move(fam)), seed};
}

}  // namespace subkmp::fixtures
