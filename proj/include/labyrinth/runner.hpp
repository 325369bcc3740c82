#pragma once

#include "labyrinth/engine.hpp"
#include "labyrinth/policy.hpp"
#include "labyrinth/report.hpp"
#include "labyrinth/world.hpp"

#include <functional>
#include <string>
#include <vector>

namespace labyrinth {

enum class Problem { Exploration, Rendezvous, Dfs };
enum class Mode { Sync, Async };
enum class Termination { AllStopped, Colocated, EdgeMeeting, CapExceeded, ScheduleExhausted };
/// What a synchronous rendezvous run does when the agents cross one edge in
/// opposite directions during the same time-step.
enum class EdgeMeetingRule { RendezvousNow, BacktrackPlusOne };

std::string to_string(Problem p);
std::string to_string(Mode m);
std::string to_string(Termination t);

struct TraceEntry {
  /// Move number (async) or time-step (sync), from 1.
  std::size_t step = 0;
  MoveRecord move;
};

struct RunReport {
  Problem problem = Problem::Exploration;
  Mode mode = Mode::Async;
  std::size_t moves = 0;
  /// Time-steps containing at least one move (sync only).
  std::size_t steps = 0;
  Rational cost{0};
  Termination terminated = Termination::AllStopped;
  std::vector<NodeId> final_positions;
  std::vector<TraceEntry> trace;
  /// Filled by the algorithm runners.
  std::vector<BoundCheck> checks;
};

/// Called with the world before every async turn or sync round.
using RoundObserver = std::function<void(const World&)>;

/// Asks `policy` for an agent and applies one move at a time. Rendezvous runs
/// stop as soon as the agents share a node (checked before each move).
/// CapExceeded once `move_cap` moves have been made without terminating.
RunReport run_async(World& world, const TableSet& tables, Problem problem, AdversaryPolicy& policy,
                    std::size_t move_cap, const RoundObserver& observer = {});

/// Applies synchronous rounds until termination or `step_cap` time-steps.
RunReport run_sync(World& world, const TableSet& tables, Problem problem, std::size_t step_cap,
                   EdgeMeetingRule rule = EdgeMeetingRule::RendezvousNow, const RoundObserver& observer = {});

/// One trace line per move, as produced by format_trace_line.
std::string format_trace(const RunReport& report);

}  // namespace labyrinth
