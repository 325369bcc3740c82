#include "labyrinth/schedule.hpp"

namespace labyrinth {

std::string format_schedule(const Schedule& s) {
  std::string out;
  out.reserve(s.turns.size() + 1);
  for (AgentId a : s.turns) out.push_back(a == 0 ? 'A' : 'T');
  out.push_back('\n');
  return out;
}

Schedule parse_schedule(std::string_view text) {
  Schedule s;
  for (char c : text) {
    if (c == 'A') {
      s.turns.push_back(0);
    } else if (c == 'T') {
      s.turns.push_back(1);
    } else if (c != '\n' && c != '\r' && c != ' ' && c != '\t') {
      throw std::invalid_argument(std::string("schedule: unexpected character '") + c + "'");
    }
  }
  return s;
}

}  // namespace labyrinth
