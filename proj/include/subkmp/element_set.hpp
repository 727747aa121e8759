#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subkmp {

using Element = std::uint32_t;

/// Subset of the ground set {0, ..., n-1}.
///
/// Ground sets with at most 64 elements use a single machine word; larger
/// ground sets keep a strictly increasing index list. Both forms are
/// canonical, so equality is plain membership equality.
class ElementSet {
 public:
  static constexpr std::size_t kWordLimit = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t n);

  static ElementSet full(std::size_t n);
  static ElementSet from_indices(std::size_t n, std::span<const Element> members);
  static ElementSet from_indices(std::size_t n, std::initializer_list<Element> members);
  /// Only valid for n <= 64.
  static ElementSet from_mask(std::size_t n, std::uint64_t mask);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_word() const noexcept { return n_ <= kWordLimit; }
  /// Bit mask of the members; throws unless is_word().
  std::uint64_t mask() const;

  bool contains(Element v) const;
  void insert(Element v);
  void erase(Element v);

  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;
  ElementSet complement() const;

  std::size_t intersection_size(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const { return intersection_size(other) != 0; }
  bool is_subset_of(const ElementSet& other) const;

  std::vector<Element> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (is_word()) {
      for (std::uint64_t m = bits_; m != 0; m &= m - 1) fn(static_cast<Element>(__builtin_ctzll(m)));
    } else {
      for (Element v : list_) fn(v);
    }
  }

  /// "{0,2,5}"
  std::string to_string() const;
  /// Hex bit mask, most significant nibble first, e.g. "0x0f".
  std::string to_hex() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

 private:
  void check_index(Element v) const;
  void check_same_ground(const ElementSet& other) const;

  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
  std::vector<Element> list_;
};

/// Canonical total order: by cardinality, then lexicographically by sorted members.
bool canonical_less(const ElementSet& a, const ElementSet& b);

}  // namespace subkmp
