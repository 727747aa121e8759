#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subkmp/element_set.hpp"
#include "subkmp/zoo.hpp"

namespace subkmp {

enum class FamilyKind { WholeSet, CardinalityAtLeast, VertexCover, Custom };

/// Membership oracle for a family of subsets of the ground set.
class FeasibleFamily {
 public:
  using Membership = std::function<bool(const ElementSet&)>;

  FeasibleFamily() = default;
  FeasibleFamily(std::size_t n, std::string name, FamilyKind kind, bool upwards_closed, Membership membership,
                 std::optional<std::vector<ElementSet>> blocker = std::nullopt);

  std::size_t ground_size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  FamilyKind kind() const noexcept { return kind_; }
  bool claims_upwards_closed() const noexcept { return upwards_closed_; }
  const std::optional<std::vector<ElementSet>>& blocker() const noexcept { return blocker_; }

  bool contains(const ElementSet& s) const;

 private:
  std::size_t n_ = 0;
  std::string name_;
  FamilyKind kind_ = FamilyKind::Custom;
  bool upwards_closed_ = false;
  std::shared_ptr<const Membership> membership_;
  std::optional<std::vector<ElementSet>> blocker_;
};

namespace family {
struct WholeSet {};
struct CardinalityAtLeast {
  std::size_t t = 0;
};
struct VertexCover {
  GraphSpec graph;
};
}  // namespace family

using FamilySpec = std::variant<family::WholeSet, family::CardinalityAtLeast, family::VertexCover>;

FeasibleFamily make_family(const FamilySpec& spec, std::size_t n);

inline bool family_contains(const FeasibleFamily& fam, const ElementSet& s) { return fam.contains(s); }

/// Exhaustive scans are limited to this many elements.
inline constexpr std::size_t kFamilyScanLimit = 16;

struct Blocker {
  std::vector<ElementSet> sets;  // canonical order
  std::size_t beta = 0;          // largest blocker set
};

/// Minimal transversals of the family, by exhaustive scan (n <= 16).
Blocker enumerate_blocker(const FeasibleFamily& fam);

struct UpwardsClosureCheck {
  bool holds = true;
  std::optional<std::pair<ElementSet, ElementSet>> witness;  // S in F, T = S + v not in F
};

UpwardsClosureCheck check_upwards_closed(const FeasibleFamily& fam);

/// Whether some member has at least k elements. Exhaustive for n <= 20 and
/// non-upwards-closed families; for upwards-closed families it tests V.
bool probe_kway_feasible(const FeasibleFamily& fam, std::size_t k);

}  // namespace subkmp
