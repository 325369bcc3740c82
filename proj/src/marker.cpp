#include "labyrinth/marker.hpp"

namespace labyrinth {

namespace {

constexpr std::array<std::string_view, kMarkerCount> kSpellings = {
    "0", "E", "F", "B", "D", "EA", "FA", "BA", "ET", "FT", "BT", "EAT", "FAT", "EATT", "FATT", "D'"};

}  // namespace

std::string_view spelling(Marker m) { return kSpellings[static_cast<std::size_t>(m)]; }

std::optional<Marker> parse_marker(std::string_view text) {
  for (std::size_t i = 0; i < kMarkerCount; ++i) {
    if (kSpellings[i] == text) return kAllMarkers[i];
  }
  return std::nullopt;
}

}  // namespace labyrinth
