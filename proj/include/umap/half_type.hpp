#pragma once

#include <compare>
#include <string>

namespace umap {

/// A value of ½ℕ stored exactly as twice its value.
struct HalfInteger {
  int twice = 0;

  constexpr bool is_integer() const { return twice % 2 == 0; }
  /// Integer part ⌊h⌋.
  constexpr int floor() const { return twice / 2; }
  constexpr HalfInteger minus_one() const { return {twice - 2}; }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
};

/// Surface type of a map: h with Euler characteristic 2 − 2h, plus orientability.
struct HalfType {
  int twice_h = 0;
  bool orientable = true;

  constexpr HalfInteger h() const { return {twice_h}; }

  friend constexpr bool operator==(const HalfType&, const HalfType&) = default;
};

/// "0", "1/2", "1", "3/2", ...
inline std::string to_string(HalfInteger h) {
  return h.is_integer() ? std::to_string(h.floor()) : std::to_string(h.twice) + "/2";
}

}  // namespace umap
