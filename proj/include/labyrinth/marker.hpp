#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace labyrinth {

/// Whiteboard symbols. Subscripts record which agent (A = Ariadne,
/// T = Theseus) has used the edge; Dp is D'.
enum class Marker : std::uint8_t {
  Empty,
  E,
  F,
  B,
  D,
  EA,
  FA,
  BA,
  ET,
  FT,
  BT,
  EAT,
  FAT,
  EATT,
  FATT,
  Dp,
};

inline constexpr std::size_t kMarkerCount = 16;

inline constexpr std::array<Marker, kMarkerCount> kAllMarkers = {
    Marker::Empty, Marker::E,  Marker::F,  Marker::B,   Marker::D,   Marker::EA,   Marker::FA,   Marker::BA,
    Marker::ET,    Marker::FT, Marker::BT, Marker::EAT, Marker::FAT, Marker::EATT, Marker::FATT, Marker::Dp};

/// Dump spelling: 0 E F B D EA FA BA ET FT BT EAT FAT EATT FATT D'
std::string_view spelling(Marker m);
std::optional<Marker> parse_marker(std::string_view text);

}  // namespace labyrinth
