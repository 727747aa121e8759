#include "subkmp/family.hpp"

#include <algorithm>

#include "subkmp/error.hpp"

namespace subkmp {

FeasibleFamily::FeasibleFamily(std::size_t n, std::string name, FamilyKind kind, bool upwards_closed,
                               Membership membership, std::optional<std::vector<ElementSet>> blocker)
    : n_(n),
      name_(std::move(name)),
      kind_(kind),
      upwards_closed_(upwards_closed),
      membership_(std::make_shared<const Membership>(std::move(membership))),
      blocker_(std::move(blocker)) {}

bool FeasibleFamily::contains(const ElementSet& s) const {
  if (!membership_) fail(ErrorCode::ContractError, "membership query on an empty family");
  if (s.ground_size() != n_) fail(ErrorCode::IndexOutOfRange, "set and family ground sets differ");
  return (*membership_)(s);
}

FeasibleFamily make_family(const FamilySpec& spec, std::size_t n) {
  if (n == 0) fail(ErrorCode::InputError, "ground set must be non-empty");
  if (std::holds_alternative<family::WholeSet>(spec)) {
    std::vector<ElementSet> singletons;
    for (std::size_t v = 0; v < n; ++v) singletons.push_back(ElementSet::from_indices(n, {static_cast<Element>(v)}));
    return FeasibleFamily(n, "whole-set", FamilyKind::WholeSet, true,
                          [n](const ElementSet& s) { return s.size() == n; }, std::move(singletons));
  }
  if (const auto* card = std::get_if<family::CardinalityAtLeast>(&spec)) {
    const std::size_t t = card->t;
    if (t > n + 1) fail(ErrorCode::InputError, "cardinality threshold exceeds n + 1");
    return FeasibleFamily(n, "cardinality-at-least(" + std::to_string(t) + ")", FamilyKind::CardinalityAtLeast, true,
                          [t](const ElementSet& s) { return s.size() >= t; });
  }
  const auto& cover = std::get<family::VertexCover>(spec);
  cover.graph.validate();
  if (cover.graph.n_vertices != n) fail(ErrorCode::InputError, "vertex-cover graph size differs from n");
  std::vector<ElementSet> edges;
  for (const Edge& e : cover.graph.edges) {
    ElementSet pair = ElementSet::from_indices(n, {e.u, e.v});
    if (std::find(edges.begin(), edges.end(), pair) == edges.end()) edges.push_back(pair);
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  return FeasibleFamily(
      n, "vertex-cover", FamilyKind::VertexCover, true,
      [edges](const ElementSet& s) {
        return std::all_of(edges.begin(), edges.end(), [&](const ElementSet& e) { return e.intersects(s); });
      },
      edges);
}

namespace {

void require_scannable(const FeasibleFamily& fam, const char* what) {
  if (fam.ground_size() > kFamilyScanLimit) {
    fail(ErrorCode::BudgetExceeded, std::string(what) + " limited to n <= " + std::to_string(kFamilyScanLimit));
  }
}

}  // namespace

Blocker enumerate_blocker(const FeasibleFamily& fam) {
  require_scannable(fam, "blocker enumeration");
  const std::size_t n = fam.ground_size();
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t full = count - 1;
  // has_member_below[m]: some member of F is a subset of m (subset-sum transform).
  std::vector<char> below(count);
  for (std::uint64_t m = 0; m < count; ++m) below[m] = fam.contains(ElementSet::from_mask(n, m)) ? 1 : 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::uint64_t m = 0; m < count; ++m)
      if (m & bit) below[m] |= below[m ^ bit];
  }
  // B meets every member iff no member fits inside V \ B.
  auto transversal = [&](std::uint64_t b) { return below[full & ~b] == 0; };
  Blocker out;
  for (std::uint64_t b = 0; b < count; ++b) {
    if (!transversal(b)) continue;
    bool minimal = true;
    for (std::uint64_t rest = b; rest != 0 && minimal; rest &= rest - 1) {
      if (transversal(b & ~(rest & -rest))) minimal = false;
    }
    if (minimal) out.sets.push_back(ElementSet::from_mask(n, b));
  }
  std::sort(out.sets.begin(), out.sets.end(), canonical_less);
  for (const auto& s : out.sets) out.beta = std::max(out.beta, s.size());
  return out;
}

UpwardsClosureCheck check_upwards_closed(const FeasibleFamily& fam) {
  require_scannable(fam, "upwards-closure check");
  const std::size_t n = fam.ground_size();
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    const ElementSet set = ElementSet::from_mask(n, s);
    if (!fam.contains(set)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (s & bit) continue;
      const ElementSet bigger = ElementSet::from_mask(n, s | bit);
      if (!fam.contains(bigger)) return {false, std::make_pair(set, bigger)};
    }
  }
  return {};
}

bool probe_kway_feasible(const FeasibleFamily& fam, std::size_t k) {
  const std::size_t n = fam.ground_size();
  if (k > n) return false;
  const ElementSet all = ElementSet::full(n);
  if (fam.claims_upwards_closed()) return fam.contains(all);
  if (n > 20) return true;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) >= k && fam.contains(ElementSet::from_mask(n, s)))
      return true;
  }
  return false;
}

}  // namespace subkmp
