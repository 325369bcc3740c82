#pragma once

#include "labyrinth/world.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace labyrinth {

/// Asynchronous turn order: which agent the adversary activates next.
struct Schedule {
  std::vector<AgentId> turns;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// File form: one character per turn, 'A' (agent 0) or 'T' (agent 1), then a
/// newline. Whitespace is ignored on input.
std::string format_schedule(const Schedule& s);
Schedule parse_schedule(std::string_view text);  // throws std::invalid_argument

}  // namespace labyrinth
