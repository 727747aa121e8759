#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subkmp/instance.hpp"
#include "subkmp/solvers.hpp"
#include "subkmp/zoo.hpp"

namespace subkmp {

/// "n m" header, then m lines "u v w". '#' lines and blank lines are skipped.
GraphSpec parse_graph(std::string_view text);
/// "n m" header, then m lines "w v1 v2 ... vr".
HypergraphSpec parse_hypergraph(std::string_view text);

std::string serialize_graph(const GraphSpec& g);
std::string serialize_hypergraph(const HypergraphSpec& hg);

/// 12 significant digits.
std::string format_real(double value);

// --- instance descriptors ------------------------------------------------------

/// Graph given inline or by a file path (relative to the descriptor).
struct GraphSource {
  std::variant<GraphSpec, std::string> source;
  friend bool operator==(const GraphSource&, const GraphSource&) = default;
};

struct HypergraphSource {
  std::variant<HypergraphSpec, std::string> source;
  friend bool operator==(const HypergraphSource&, const HypergraphSource&) = default;
};

/// One zoo function. Which fields are meaningful depends on `type`:
///   modular            weights
///   cardinality        -
///   truncated-cardinality  cap
///   graph-cut | graph-internal | graph-coverage   graph
///   hypergraph-cut     hypergraph
///   hardness           kind, beta (absent = policy), r (absent = drawn with r_seed)
struct FunctionSpec {
  std::string type;
  std::vector<double> weights;
  std::size_t cap = 0;
  std::optional<GraphSource> graph;
  std::optional<HypergraphSource> hypergraph;
  std::string kind;
  std::optional<std::int64_t> beta;
  std::optional<std::vector<Element>> r;
  std::uint64_t r_seed = 0;
  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

struct FamilyDescriptor {
  std::string type = "whole-set";  // whole-set | cardinality-at-least | vertex-cover
  std::size_t t = 0;
  std::optional<GraphSource> graph;
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

struct InstanceDescriptor {
  std::size_t n = 0;
  std::size_t k = 0;
  bool shared = true;
  std::vector<FunctionSpec> functions;  // one entry when shared
  FamilyDescriptor family;
  std::string solver = "exact";
  std::uint64_t seed = 0;
  std::uint64_t max_states = EnumerationBudget{}.max_states;
  std::size_t split_cap = kDefaultSplitCap;
  friend bool operator==(const InstanceDescriptor&, const InstanceDescriptor&) = default;
};

/// Strict JSON reader: unknown keys and wrong types are InputErrors.
InstanceDescriptor parse_descriptor(std::string_view text);
/// Canonical JSON; parse_descriptor(serialize_descriptor(d)) == d.
std::string serialize_descriptor(const InstanceDescriptor& d);

FunctionSpec parse_function_spec(std::string_view json_text, std::optional<std::size_t>* n_out = nullptr);

struct LoadedInstance {
  MultiAgentInstance inst;
  SolverConfig config;
  std::string solver;
  std::uint64_t seed = 0;
  std::string fingerprint;
};

/// Builds oracles and family. Relative file references resolve against base_dir.
ValueOracle build_function(const FunctionSpec& spec, std::size_t n, const std::string& base_dir = ".");
LoadedInstance build_instance(const InstanceDescriptor& d, const std::string& base_dir = ".");
LoadedInstance parse_instance(std::string_view text, const std::string& base_dir = ".");

/// Compact reconstruction key: n, k, seeds, beta and R as hex for hardness functions.
std::string fingerprint(const InstanceDescriptor& d);

std::string read_file(const std::string& path);

}  // namespace subkmp
