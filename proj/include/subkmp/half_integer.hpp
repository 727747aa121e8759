#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace subkmp {

/// Exact value in (1/2)Z, stored as a count of halves.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_halves(std::int64_t halves) { return HalfInteger(halves); }
  static constexpr HalfInteger from_int(std::int64_t value) { return HalfInteger(2 * value); }

  constexpr std::int64_t halves() const { return halves_; }
  constexpr double to_double() const { return static_cast<double>(halves_) / 2.0; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(halves_ + o.halves_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(halves_ - o.halves_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    halves_ += o.halves_;
    return *this;
  }
  constexpr HalfInteger operator*(std::int64_t s) const { return HalfInteger(halves_ * s); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  /// Exact decimal: "4", "-2.5".
  std::string to_string() const;

 private:
  constexpr explicit HalfInteger(std::int64_t halves) : halves_(halves) {}
  std::int64_t halves_ = 0;
};

}  // namespace subkmp
