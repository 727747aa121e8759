#include "subkmp/half_integer.hpp"

namespace subkmp {

std::string HalfInteger::to_string() const {
  const std::int64_t whole = halves_ / 2;
  if (halves_ % 2 == 0) return std::to_string(whole);
  // halves_ odd: value = whole + sign * 0.5
  if (halves_ < 0) return "-" + std::to_string(-whole) + ".5";
  return std::to_string(whole) + ".5";
}

}  // namespace subkmp
