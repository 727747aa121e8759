#include "subkmp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "subkmp/error.hpp"
#include "subkmp/family.hpp"

namespace subkmp {

using nlohmann::json;

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::InputError, what + ", line " + std::to_string(line));
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    line_error(line, "malformed integer '" + std::string(token) + "'");
  return value;
}

double parse_weight(std::string_view token, std::size_t line) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
    line_error(line, "malformed weight '" + std::string(token) + "'");
  if (value < 0) line_error(line, "negative weight");
  return value;
}

Element parse_vertex(std::string_view token, std::size_t n, std::size_t line) {
  const std::uint64_t v = parse_uint(token, line);
  if (v >= n) line_error(line, "vertex index out of range");
  return static_cast<Element>(v);
}

std::pair<std::size_t, std::size_t> parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) fail(ErrorCode::InputError, "missing \"n m\" header");
  const Line& h = lines.front();
  if (h.tokens.size() != 2) line_error(h.number, "header must be \"n m\"");
  const std::uint64_t n = parse_uint(h.tokens[0], h.number);
  const std::uint64_t m = parse_uint(h.tokens[1], h.number);
  if (n == 0) line_error(h.number, "n must be positive");
  if (lines.size() - 1 != m) {
    fail(ErrorCode::InputError,
         "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  return {n, m};
}

}  // namespace

GraphSpec parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  const auto [n, m] = parse_header(lines);
  GraphSpec g;
  g.n_vertices = n;
  for (std::size_t i = 1; i <= m; ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3) line_error(l.number, "edge line must be \"u v w\"");
    Edge e{parse_vertex(l.tokens[0], n, l.number), parse_vertex(l.tokens[1], n, l.number),
           parse_weight(l.tokens[2], l.number)};
    if (e.u == e.v) line_error(l.number, "self-loop");
    g.edges.push_back(e);
  }
  return g;
}

HypergraphSpec parse_hypergraph(std::string_view text) {
  const auto lines = tokenize(text);
  const auto [n, m] = parse_header(lines);
  HypergraphSpec hg;
  hg.n_vertices = n;
  for (std::size_t i = 1; i <= m; ++i) {
    const Line& l = lines[i];
    Hyperedge e;
    e.weight = parse_weight(l.tokens[0], l.number);
    if (l.tokens.size() < 2) line_error(l.number, "empty hyperedge");
    for (std::size_t t = 1; t < l.tokens.size(); ++t) e.vertices.push_back(parse_vertex(l.tokens[t], n, l.number));
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    hg.hyperedges.push_back(std::move(e));
  }
  return hg;
}

std::string format_real(double value) {
  if (value == 0) return "0";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string serialize_graph(const GraphSpec& g) {
  std::ostringstream out;
  out << g.n_vertices << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) out << e.u << ' ' << e.v << ' ' << format_real(e.weight) << '\n';
  return out.str();
}

std::string serialize_hypergraph(const HypergraphSpec& hg) {
  std::ostringstream out;
  out << hg.n_vertices << ' ' << hg.hyperedges.size() << '\n';
  for (const Hyperedge& e : hg.hyperedges) {
    out << format_real(e.weight);
    for (Element v : e.vertices) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

// --- descriptors ---------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InputError, what); }

void expect_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) bad(ctx + ": expected an object");
}

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& ctx) {
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
      bad(ctx + ": unknown key '" + key + "'");
  }
}

const json& require(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key)) bad(ctx + ": missing key '" + std::string(key) + "'");
  return j.at(key);
}

std::uint64_t as_uint(const json& j, const std::string& ctx) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(ctx + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::int64_t as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) bad(ctx + ": expected an integer");
  return j.get<std::int64_t>();
}

double as_real(const json& j, const std::string& ctx) {
  if (!j.is_number()) bad(ctx + ": expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) bad(ctx + ": expected a string");
  return j.get<std::string>();
}

GraphSource graph_from_json(const json& j, const std::string& ctx) {
  expect_object(j, ctx);
  if (j.contains("file")) {
    allow_keys(j, {"file"}, ctx);
    return {as_string(j.at("file"), ctx + ".file")};
  }
  allow_keys(j, {"vertices", "edges"}, ctx);
  GraphSpec g;
  g.n_vertices = as_uint(require(j, "vertices", ctx), ctx + ".vertices");
  const json& edges = require(j, "edges", ctx);
  if (!edges.is_array()) bad(ctx + ".edges: expected an array");
  for (const json& e : edges) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) bad(ctx + ".edges: each edge is [u, v] or [u, v, w]");
    Edge edge{static_cast<Element>(as_uint(e[0], ctx)), static_cast<Element>(as_uint(e[1], ctx)),
              e.size() == 3 ? as_real(e[2], ctx) : 1.0};
    g.edges.push_back(edge);
  }
  g.validate();
  return {g};
}

json graph_to_json(const GraphSource& src) {
  if (const auto* file = std::get_if<std::string>(&src.source)) return {{"file", *file}};
  const auto& g = std::get<GraphSpec>(src.source);
  json edges = json::array();
  for (const Edge& e : g.edges) edges.push_back({e.u, e.v, e.weight});
  return {{"vertices", g.n_vertices}, {"edges", edges}};
}

HypergraphSource hypergraph_from_json(const json& j, const std::string& ctx) {
  expect_object(j, ctx);
  if (j.contains("file")) {
    allow_keys(j, {"file"}, ctx);
    return {as_string(j.at("file"), ctx + ".file")};
  }
  allow_keys(j, {"vertices", "hyperedges"}, ctx);
  HypergraphSpec hg;
  hg.n_vertices = as_uint(require(j, "vertices", ctx), ctx + ".vertices");
  const json& edges = require(j, "hyperedges", ctx);
  if (!edges.is_array()) bad(ctx + ".hyperedges: expected an array");
  for (const json& e : edges) {
    expect_object(e, ctx + ".hyperedges[]");
    allow_keys(e, {"vertices", "weight"}, ctx + ".hyperedges[]");
    Hyperedge h;
    const json& vs = require(e, "vertices", ctx);
    if (!vs.is_array()) bad(ctx + ".hyperedges[].vertices: expected an array");
    for (const json& v : vs) h.vertices.push_back(static_cast<Element>(as_uint(v, ctx)));
    h.weight = e.contains("weight") ? as_real(e.at("weight"), ctx) : 1.0;
    hg.hyperedges.push_back(std::move(h));
  }
  hg.validate();
  return {hg};
}

json hypergraph_to_json(const HypergraphSource& src) {
  if (const auto* file = std::get_if<std::string>(&src.source)) return {{"file", *file}};
  const auto& hg = std::get<HypergraphSpec>(src.source);
  json edges = json::array();
  for (const Hyperedge& e : hg.hyperedges) edges.push_back({{"vertices", e.vertices}, {"weight", e.weight}});
  return {{"vertices", hg.n_vertices}, {"hyperedges", edges}};
}

const std::set<std::string>& function_types() {
  static const std::set<std::string> types = {"modular",        "cardinality",    "truncated-cardinality",
                                              "graph-cut",      "graph-internal", "graph-coverage",
                                              "hypergraph-cut", "hardness"};
  return types;
}

FunctionSpec function_from_json(const json& j, const std::string& ctx, std::optional<std::size_t>* n_out) {
  expect_object(j, ctx);
  FunctionSpec f;
  f.type = as_string(require(j, "type", ctx), ctx + ".type");
  if (!function_types().contains(f.type)) bad(ctx + ": unknown function type '" + f.type + "'");
  const bool standalone = n_out != nullptr;
  auto keys = [&](std::initializer_list<const char*> extra) {
    std::vector<std::string> allowed{"type"};
    if (standalone) allowed.emplace_back("n");
    allowed.insert(allowed.end(), extra.begin(), extra.end());
    for (const auto& [key, _] : j.items())
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) bad(ctx + ": unknown key '" + key + "'");
  };
  if (f.type == "modular") {
    keys({"weights"});
    const json& w = require(j, "weights", ctx);
    if (!w.is_array()) bad(ctx + ".weights: expected an array");
    for (const json& x : w) f.weights.push_back(as_real(x, ctx + ".weights"));
  } else if (f.type == "cardinality") {
    keys({});
  } else if (f.type == "truncated-cardinality") {
    keys({"cap"});
    f.cap = as_uint(require(j, "cap", ctx), ctx + ".cap");
  } else if (f.type.starts_with("graph-")) {
    keys({"graph"});
    f.graph = graph_from_json(require(j, "graph", ctx), ctx + ".graph");
  } else if (f.type == "hypergraph-cut") {
    keys({"hypergraph"});
    f.hypergraph = hypergraph_from_json(require(j, "hypergraph", ctx), ctx + ".hypergraph");
  } else {
    keys({"kind", "beta", "r", "r_seed"});
    f.kind = as_string(require(j, "kind", ctx), ctx + ".kind");
    if (f.kind != "F1" && f.kind != "F2" && f.kind != "F3" && f.kind != "F4")
      bad(ctx + ".kind: expected F1, F2, F3 or F4");
    if (j.contains("beta")) f.beta = as_int(j.at("beta"), ctx + ".beta");
    if (j.contains("r")) {
      const json& r = j.at("r");
      if (!r.is_array()) bad(ctx + ".r: expected an array of element indices");
      std::vector<Element> members;
      for (const json& v : r) members.push_back(static_cast<Element>(as_uint(v, ctx + ".r")));
      f.r = members;
    }
    if (j.contains("r_seed")) f.r_seed = as_uint(j.at("r_seed"), ctx + ".r_seed");
  }
  if (standalone) {
    if (j.contains("n")) *n_out = as_uint(j.at("n"), ctx + ".n");
  }
  return f;
}

json function_to_json(const FunctionSpec& f) {
  json j{{"type", f.type}};
  if (f.type == "modular") j["weights"] = f.weights;
  if (f.type == "truncated-cardinality") j["cap"] = f.cap;
  if (f.graph) j["graph"] = graph_to_json(*f.graph);
  if (f.hypergraph) j["hypergraph"] = hypergraph_to_json(*f.hypergraph);
  if (f.type == "hardness") {
    j["kind"] = f.kind;
    if (f.beta) j["beta"] = *f.beta;
    if (f.r) j["r"] = *f.r;
    j["r_seed"] = f.r_seed;
  }
  return j;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

InstanceDescriptor parse_descriptor(std::string_view text) {
  const json j = parse_json(text);
  const std::string ctx = "instance";
  expect_object(j, ctx);
  allow_keys(j, {"n", "k", "function", "functions", "family", "solver", "seed", "max_states", "split_cap"}, ctx);
  InstanceDescriptor d;
  d.n = as_uint(require(j, "n", ctx), "instance.n");
  d.k = as_uint(require(j, "k", ctx), "instance.k");
  if (d.n == 0) bad("instance.n must be at least 1");
  if (d.k == 0) bad("instance.k must be at least 1");
  if (j.contains("function") == j.contains("functions")) bad("instance: give exactly one of 'function' or 'functions'");
  if (j.contains("function")) {
    d.shared = true;
    d.functions.push_back(function_from_json(j.at("function"), "instance.function", nullptr));
  } else {
    d.shared = false;
    const json& fs = j.at("functions");
    if (!fs.is_array()) bad("instance.functions: expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i)
      d.functions.push_back(function_from_json(fs[i], "instance.functions[" + std::to_string(i) + "]", nullptr));
    if (d.functions.size() != d.k) bad("instance.functions: expected k = " + std::to_string(d.k) + " entries");
  }
  if (j.contains("family")) {
    const json& fam = j.at("family");
    expect_object(fam, "instance.family");
    d.family.type = as_string(require(fam, "type", "instance.family"), "instance.family.type");
    if (d.family.type == "whole-set") {
      allow_keys(fam, {"type"}, "instance.family");
    } else if (d.family.type == "cardinality-at-least") {
      allow_keys(fam, {"type", "t"}, "instance.family");
      d.family.t = as_uint(require(fam, "t", "instance.family"), "instance.family.t");
    } else if (d.family.type == "vertex-cover") {
      allow_keys(fam, {"type", "graph"}, "instance.family");
      d.family.graph = graph_from_json(require(fam, "graph", "instance.family"), "instance.family.graph");
    } else {
      bad("instance.family: unknown family type '" + d.family.type + "'");
    }
  }
  if (j.contains("solver")) d.solver = as_string(j.at("solver"), "instance.solver");
  const auto& names = solver_names();
  if (std::find(names.begin(), names.end(), d.solver) == names.end()) bad("unknown solver '" + d.solver + "'");
  if (j.contains("seed")) d.seed = as_uint(j.at("seed"), "instance.seed");
  if (j.contains("max_states")) d.max_states = as_uint(j.at("max_states"), "instance.max_states");
  if (j.contains("split_cap")) d.split_cap = as_uint(j.at("split_cap"), "instance.split_cap");
  return d;
}

std::string serialize_descriptor(const InstanceDescriptor& d) {
  json j{{"n", d.n}, {"k", d.k}};
  if (d.shared) {
    j["function"] = function_to_json(d.functions.at(0));
  } else {
    json fs = json::array();
    for (const auto& f : d.functions) fs.push_back(function_to_json(f));
    j["functions"] = fs;
  }
  json fam{{"type", d.family.type}};
  if (d.family.type == "cardinality-at-least") fam["t"] = d.family.t;
  if (d.family.graph) fam["graph"] = graph_to_json(*d.family.graph);
  j["family"] = fam;
  j["solver"] = d.solver;
  j["seed"] = d.seed;
  j["max_states"] = d.max_states;
  j["split_cap"] = d.split_cap;
  return j.dump(2) + "\n";
}

FunctionSpec parse_function_spec(std::string_view json_text, std::optional<std::size_t>* n_out) {
  std::optional<std::size_t> scratch;
  return function_from_json(parse_json(json_text), "function", n_out ? n_out : &scratch);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string resolve(const std::string& path, const std::string& base_dir) {
  std::filesystem::path p(path);
  if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
  return p.string();
}

GraphSpec load_graph(const GraphSource& src, const std::string& base_dir) {
  if (const auto* file = std::get_if<std::string>(&src.source)) return parse_graph(read_file(resolve(*file, base_dir)));
  return std::get<GraphSpec>(src.source);
}

HypergraphSpec load_hypergraph(const HypergraphSource& src, const std::string& base_dir) {
  if (const auto* file = std::get_if<std::string>(&src.source))
    return parse_hypergraph(read_file(resolve(*file, base_dir)));
  return std::get<HypergraphSpec>(src.source);
}

HardnessKind hardness_kind(const std::string& kind) {
  if (kind == "F1") return HardnessKind::F1;
  if (kind == "F2") return HardnessKind::F2;
  if (kind == "F3") return HardnessKind::F3;
  return HardnessKind::F4;
}

HardnessParams hardness_params(const FunctionSpec& spec, std::size_t n) {
  if (n % 2 != 0) bad("hardness functions need an even n");
  const std::int64_t beta = spec.beta ? *spec.beta : HardnessParams::policy_beta(n);
  ElementSet r = spec.r ? ElementSet::from_indices(n, *spec.r) : draw_half_set(n, spec.r_seed);
  HardnessParams p = HardnessParams::with_beta(n, std::move(r), beta);
  if (!spec.r) p.r_seed = spec.r_seed;
  return p;
}

std::string describe_graph(const std::optional<GraphSource>& g) {
  if (!g) return "";
  if (const auto* file = std::get_if<std::string>(&g->source)) return "file:" + *file;
  const auto& spec = std::get<GraphSpec>(g->source);
  return "m=" + std::to_string(spec.edges.size()) + ",w=" + format_real(spec.total_weight());
}

std::string describe_function(const FunctionSpec& f, std::size_t n) {
  if (f.type == "modular") {
    std::string out = "modular(";
    for (std::size_t i = 0; i < f.weights.size(); ++i) out += (i ? "," : "") + format_real(f.weights[i]);
    return out + ")";
  }
  if (f.type == "truncated-cardinality") return "truncated-cardinality(" + std::to_string(f.cap) + ")";
  if (f.graph) return f.type + "(" + describe_graph(f.graph) + ")";
  if (f.hypergraph) {
    if (const auto* file = std::get_if<std::string>(&f.hypergraph->source)) return f.type + "(file:" + *file + ")";
    return f.type + "(m=" + std::to_string(std::get<HypergraphSpec>(f.hypergraph->source).hyperedges.size()) + ")";
  }
  if (f.type == "hardness") {
    const HardnessParams p = hardness_params(f, n);
    std::string out = f.kind + "(beta=" + std::to_string(p.beta) + ",eps=" + format_real(p.epsilon) +
                      ",R=" + p.r.to_hex();
    if (p.r_seed) out += ",r_seed=" + std::to_string(*p.r_seed);
    return out + ")";
  }
  return f.type;
}

}  // namespace

ValueOracle build_function(const FunctionSpec& spec, std::size_t n, const std::string& base_dir) {
  if (spec.type == "modular") {
    if (spec.weights.size() != n) bad("modular function needs exactly n = " + std::to_string(n) + " weights");
    return make_modular(spec.weights);
  }
  if (spec.type == "cardinality") return make_cardinality(n);
  if (spec.type == "truncated-cardinality") return make_truncated_cardinality(n, spec.cap);
  if (spec.type.starts_with("graph-")) {
    const GraphSpec g = load_graph(*spec.graph, base_dir);
    if (g.n_vertices != n) bad("graph has " + std::to_string(g.n_vertices) + " vertices, expected n = " + std::to_string(n));
    const GraphFunctions gf = make_graph_functions(g);
    if (spec.type == "graph-cut") return gf.delta;
    if (spec.type == "graph-internal") return gf.internal;
    return gf.monotone_proxy;
  }
  if (spec.type == "hypergraph-cut") {
    const HypergraphSpec hg = load_hypergraph(*spec.hypergraph, base_dir);
    if (hg.n_vertices != n) bad("hypergraph vertex count differs from n");
    return make_hypergraph_cut(hg);
  }
  if (spec.type == "hardness") return make_hardness(hardness_kind(spec.kind), hardness_params(spec, n));
  bad("unknown function type '" + spec.type + "'");
}

std::string fingerprint(const InstanceDescriptor& d) {
  std::string out = "n=" + std::to_string(d.n) + " k=" + std::to_string(d.k) + " seed=" + std::to_string(d.seed) +
                    " family=" + d.family.type;
  if (d.family.type == "cardinality-at-least") out += "(" + std::to_string(d.family.t) + ")";
  if (d.family.graph) out += "(" + describe_graph(d.family.graph) + ")";
  out += d.shared ? " f=" : " f=[";
  for (std::size_t i = 0; i < d.functions.size(); ++i) out += (i ? ";" : "") + describe_function(d.functions[i], d.n);
  if (!d.shared) out += "]";
  return out;
}

LoadedInstance build_instance(const InstanceDescriptor& d, const std::string& base_dir) {
  std::vector<ValueOracle> functions;
  for (const auto& f : d.functions) functions.push_back(build_function(f, d.n, base_dir));
  FeasibleFamily fam;
  if (d.family.type == "whole-set") {
    fam = make_family(family::WholeSet{}, d.n);
  } else if (d.family.type == "cardinality-at-least") {
    fam = make_family(family::CardinalityAtLeast{d.family.t}, d.n);
  } else {
    fam = make_family(family::VertexCover{load_graph(*d.family.graph, base_dir)}, d.n);
  }
  LoadedInstance out;
  out.inst = MultiAgentInstance{d.n, d.k, std::move(functions), std::move(fam)};
  out.inst.validate();
  out.config.budget.max_states = d.max_states;
  out.config.split_cap = d.split_cap;
  out.solver = d.solver;
  out.seed = d.seed;
  out.fingerprint = fingerprint(d);
  return out;
}

LoadedInstance parse_instance(std::string_view text, const std::string& base_dir) {
  return build_instance(parse_descriptor(text), base_dir);
}

}  // namespace subkmp
