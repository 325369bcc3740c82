#include "labyrinth/tables.hpp"

namespace labyrinth {

namespace {

using M = Marker;
constexpr std::optional<Marker> keep = std::nullopt;

}  // namespace

const NavigationTable& tremaux_table() {
  static const NavigationTable table(
      "tremaux",
      {
          {M::B, M::E, Condition::any(), keep},
          {M::Empty, M::E, Condition::discovered(DiscoveryClass::Any), M::B},
          {M::Empty, M::E, Condition::undiscovered(DiscoveryClass::Any), M::F},
          {M::F, keep, Condition::any(), keep},
      },
      {M::Empty, M::E, M::F, M::B});
  return table;
}

const NavigationTable& exploration_table() {
  static const NavigationTable table(
      "explore2",
      {
          {M::B, M::D, Condition::any(), M::D},
          {M::Empty, M::E, Condition::arrival(M::E), M::D},
          {M::Empty, M::E, Condition::discovered(DiscoveryClass::Any), M::B},
          {M::Empty, M::E, Condition::undiscovered(DiscoveryClass::Any), M::F},
          {M::F, M::D, Condition::any(), M::D},
          {M::E, M::D, Condition::any(), M::D},
      },
      {M::Empty, M::E, M::F, M::B, M::D});
  return table;
}

const NavigationTable& ariadne_table() {
  static const NavigationTable table(
      "ariadne",
      {
          {M::BA, M::D, Condition::any(), M::D},
          {M::ET, M::EAT, Condition::any(), M::FAT},
          {M::FAT, M::Dp, Condition::any(), M::Dp},
          {M::Empty, M::EA, Condition::discovered(DiscoveryClass::A), M::BA},
          {M::Empty, M::EA, Condition::undiscovered(DiscoveryClass::A), M::FA},
          {M::FA, M::D, Condition::any(), M::D},
      },
      {M::Empty, M::EA, M::FA, M::BA, M::ET, M::EAT, M::FAT, M::D, M::Dp});
  return table;
}

const NavigationTable& theseus_table() {
  static const NavigationTable table(
      "theseus",
      {
          {M::BT, M::D, Condition::any(), M::D},
          {M::EA, M::EAT, Condition::any(), M::FAT},
          {M::EAT, M::EATT, Condition::any(), M::FATT},
          {M::Empty, M::ET, Condition::discovered(DiscoveryClass::T), M::BT},
          {M::Empty, M::ET, Condition::undiscovered(DiscoveryClass::T), M::FT},
          {M::FT, M::D, Condition::any(), M::D},
      },
      {M::Empty, M::ET, M::FT, M::BT, M::EA, M::EAT, M::EATT, M::FAT, M::FATT, M::D});
  return table;
}

}  // namespace labyrinth
