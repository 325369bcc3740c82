#pragma once

#include "labyrinth/continuous.hpp"
#include "labyrinth/report.hpp"

#include <string>
#include <vector>

namespace labyrinth {

/// A lower-bound family instance with the adversary's speed allocation.
struct GadgetScenario {
  std::string name;
  Graph graph;
  Problem problem = Problem::Exploration;
  std::array<NodeId, 2> starts{};
  std::array<SpeedProfile, 2> profiles;
};

struct GadgetOutcome {
  ContinuousRun continuous;
  RunReport replay;
  std::vector<BoundCheck> checks;
};

/// The line (L = 4, both agents from one end), the cycle with two edges of
/// equal length, and the broken cycle, all at equal unit speeds, plus a
/// few unequal-length and unequal-speed variants.
std::vector<GadgetScenario> gadget_scenarios();

/// Reduces the scenario to a schedule on the subdivided graph, replays it and
/// evaluates: exploration cost = 2L, or rendezvous cost <= 3L with a meeting.
GadgetOutcome run_gadget_scenario(const GadgetScenario& scenario);

}  // namespace labyrinth
