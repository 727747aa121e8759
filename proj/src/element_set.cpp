#include "subkmp/element_set.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "subkmp/error.hpp"

namespace subkmp {

ElementSet::ElementSet(std::size_t n) : n_(n) {}

ElementSet ElementSet::full(std::size_t n) {
  ElementSet s(n);
  if (s.is_word()) {
    s.bits_ = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  } else {
    s.list_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.list_[i] = static_cast<Element>(i);
  }
  return s;
}

ElementSet ElementSet::from_indices(std::size_t n, std::span<const Element> members) {
  ElementSet s(n);
  for (Element v : members) s.insert(v);
  return s;
}

ElementSet ElementSet::from_indices(std::size_t n, std::initializer_list<Element> members) {
  return from_indices(n, std::span<const Element>(members.begin(), members.size()));
}

ElementSet ElementSet::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > kWordLimit) fail(ErrorCode::ContractError, "from_mask requires a ground set of at most 64 elements");
  ElementSet s(n);
  if (n < 64 && (mask >> n) != 0) fail(ErrorCode::IndexOutOfRange, "mask has bits beyond the ground set");
  s.bits_ = mask;
  return s;
}

std::size_t ElementSet::size() const noexcept {
  return is_word() ? static_cast<std::size_t>(std::popcount(bits_)) : list_.size();
}

std::uint64_t ElementSet::mask() const {
  if (!is_word()) fail(ErrorCode::ContractError, "mask() requires a ground set of at most 64 elements");
  return bits_;
}

void ElementSet::check_index(Element v) const {
  if (v >= n_) {
    fail(ErrorCode::IndexOutOfRange,
         "element " + std::to_string(v) + " out of range for ground set of size " + std::to_string(n_));
  }
}

void ElementSet::check_same_ground(const ElementSet& other) const {
  if (other.n_ != n_) {
    fail(ErrorCode::IndexOutOfRange, "ground set size mismatch: " + std::to_string(n_) + " vs " +
                                         std::to_string(other.n_));
  }
}

bool ElementSet::contains(Element v) const {
  check_index(v);
  if (is_word()) return (bits_ >> v) & 1U;
  return std::binary_search(list_.begin(), list_.end(), v);
}

void ElementSet::insert(Element v) {
  check_index(v);
  if (is_word()) {
    bits_ |= std::uint64_t{1} << v;
    return;
  }
  auto it = std::lower_bound(list_.begin(), list_.end(), v);
  if (it == list_.end() || *it != v) list_.insert(it, v);
}

void ElementSet::erase(Element v) {
  check_index(v);
  if (is_word()) {
    bits_ &= ~(std::uint64_t{1} << v);
    return;
  }
  auto it = std::lower_bound(list_.begin(), list_.end(), v);
  if (it != list_.end() && *it == v) list_.erase(it);
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  check_same_ground(other);
  ElementSet out(n_);
  if (is_word()) {
    out.bits_ = bits_ | other.bits_;
  } else {
    std::set_union(list_.begin(), list_.end(), other.list_.begin(), other.list_.end(), std::back_inserter(out.list_));
  }
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  check_same_ground(other);
  ElementSet out(n_);
  if (is_word()) {
    out.bits_ = bits_ & other.bits_;
  } else {
    std::set_intersection(list_.begin(), list_.end(), other.list_.begin(), other.list_.end(),
                          std::back_inserter(out.list_));
  }
  return out;
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  check_same_ground(other);
  ElementSet out(n_);
  if (is_word()) {
    out.bits_ = bits_ & ~other.bits_;
  } else {
    std::set_difference(list_.begin(), list_.end(), other.list_.begin(), other.list_.end(),
                        std::back_inserter(out.list_));
  }
  return out;
}

ElementSet ElementSet::complement() const { return full(n_) - *this; }

std::size_t ElementSet::intersection_size(const ElementSet& other) const {
  check_same_ground(other);
  if (is_word()) return static_cast<std::size_t>(std::popcount(bits_ & other.bits_));
  std::size_t count = 0;
  auto a = list_.begin();
  auto b = other.list_.begin();
  while (a != list_.end() && b != other.list_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_ground(other);
  if (is_word()) return (bits_ & ~other.bits_) == 0;
  return std::includes(other.list_.begin(), other.list_.end(), list_.begin(), list_.end());
}

std::vector<Element> ElementSet::elements() const {
  if (!is_word()) return list_;
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element v) { out.push_back(v); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

std::string ElementSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = std::max<std::size_t>(1, (n_ + 3) / 4);
  std::string out(nibbles, '0');
  for_each([&](Element v) {
    const std::size_t nib = v / 4;
    char& c = out[nibbles - 1 - nib];
    const int digit = static_cast<int>(std::string_view(kDigits).find(c)) | (1 << (v % 4));
    c = kDigits[digit];
  });
  if (out.size() % 2 == 1) out.insert(out.begin(), '0');
  return "0x" + out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace subkmp
