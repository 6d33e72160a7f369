#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "laby/errors.hpp"

namespace laby {

/// Square coordinates inside an m x m grid. Row 0 is the BOTTOM row
/// (Cartesian y axis); text serialization flips, see pattern_io.
struct CellAddr {
  std::int32_t col = 0;
  std::int32_t row = 0;

  friend auto operator<=>(const CellAddr&, const CellAddr&) = default;
};

enum class Side : std::uint8_t { Top, Bottom, Left, Right };

constexpr Side opposite(Side s) {
  switch (s) {
    case Side::Top: return Side::Bottom;
    case Side::Bottom: return Side::Top;
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
  }
  return Side::Top;
}

constexpr std::string_view to_string(Side s) {
  switch (s) {
    case Side::Top: return "top";
    case Side::Bottom: return "bottom";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

inline Side parse_side(std::string_view name) {
  if (name == "top") return Side::Top;
  if (name == "bottom") return Side::Bottom;
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  throw BadParameter("unknown side '" + std::string(name) + "' (want top|bottom|left|right)");
}

}  // namespace laby
