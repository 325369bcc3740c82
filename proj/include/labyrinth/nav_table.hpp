#pragma once

#include "labyrinth/marker.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace labyrinth {

/// Whose discoveries a "v discovered" condition consults. Any covers every
/// agent in the world; A and T are agent 0 and agent 1 respectively.
enum class DiscoveryClass : std::uint8_t { Any, A, T };

/// What the agent must observe on arrival (step S4) for a row to apply.
struct Condition {
  enum class Kind : std::uint8_t { Any, ArrivalMarker, Discovered, Undiscovered };

  Kind kind = Kind::Any;
  Marker marker = Marker::Empty;                 // ArrivalMarker only
  DiscoveryClass discovery = DiscoveryClass::Any;  // (Un)Discovered only

  static Condition any() { return {}; }
  static Condition arrival(Marker m) { return {Kind::ArrivalMarker, m, DiscoveryClass::Any}; }
  static Condition discovered(DiscoveryClass c) { return {Kind::Discovered, Marker::Empty, c}; }
  static Condition undiscovered(DiscoveryClass c) { return {Kind::Undiscovered, Marker::Empty, c}; }

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// One line of a navigation table. An empty optional is the table's dash:
/// keep the marker as it is.
struct NavRow {
  Marker read_u = Marker::Empty;
  std::optional<Marker> write_u;
  Condition cond_v;
  std::optional<Marker> write_v;

  friend bool operator==(const NavRow&, const NavRow&) = default;
};

class TableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Priority-ordered rows. Construction rejects empty tables and rows that
/// mention symbols outside the declared alphabet.
class NavigationTable {
 public:
  NavigationTable(std::string name, std::vector<NavRow> rows, std::set<Marker> alphabet);

  const std::string& name() const { return name_; }
  const std::vector<NavRow>& rows() const { return rows_; }
  const std::set<Marker>& alphabet() const { return alphabet_; }

  /// One row per line: `read_u write_u cond_v write_v`, '-' for keep/any.
  std::string dump() const;

 private:
  std::string name_;
  std::vector<NavRow> rows_;
  std::set<Marker> alphabet_;
};

std::string to_string(const Condition& c);

}  // namespace labyrinth
