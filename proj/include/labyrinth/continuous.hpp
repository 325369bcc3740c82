#pragma once

#include "labyrinth/engine.hpp"
#include "labyrinth/generators.hpp"
#include "labyrinth/runner.hpp"
#include "labyrinth/schedule.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace labyrinth {

class ZeroSpeedDeadlock : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Piecewise-constant speed: (duration, speed) segments from time 0. The
/// last segment's speed continues after the profile ends.
struct SpeedProfile {
  std::vector<std::pair<Rational, Rational>> segments;

  static SpeedProfile constant(Rational speed) { return SpeedProfile{{{Rational(1), speed}}}; }

  /// Throws std::invalid_argument on an empty profile, a non-positive
  /// duration or a negative speed.
  void validate() const;
  Rational speed_at(const Rational& t) const;
  /// Earliest instant >= t with positive speed, if any.
  std::optional<Rational> next_moving(const Rational& t) const;
  /// Instant at which `distance` more has been covered, starting at t.
  std::optional<Rational> reach(const Rational& t, const Rational& distance) const;
};

struct ContinuousRun {
  /// One entry per half-edge move on the subdivided graph, in event order.
  Schedule schedule;
  /// Original nodes each agent stood on, starting with its start node.
  std::array<std::vector<NodeId>, 2> nodes;
  /// Both agents were strictly inside one edge at once. Rendezvous runs end
  /// there, with the second agent's entry as the last schedule entry.
  /// Exploration runs are cut just before a crossing in opposite directions
  /// or an overtake (the later entrant arriving first), and carry on
  /// through other same-direction overlaps.
  bool edge_encounter = false;
  /// The encounter was a crossing in opposite directions.
  bool opposite_encounter = false;
  /// Exploration cut at an encounter: every other edge had been traversed
  /// twice, so the encounter edge was the last one being explored.
  bool explored_at_encounter = false;
  /// Rendezvous reached, at a node or inside an edge.
  bool colocated = false;
  Rational end_time{0};
  /// Distance covered by completed traversals.
  Rational energy{0};
};

/// Runs both agents on the original graph of `sub` with the given speeds.
/// A move starts (S1, S2) at the first instant the agent is at a node with
/// positive speed and ends (S4, S5) when it has covered the edge length.
/// Simultaneous events: arrivals before departures, then agent 0 first.
/// Throws ZeroSpeedDeadlock if both agents are still running and neither can
/// ever move again. If one has stopped and the other is frozen for good, the
/// schedule simply ends.
ContinuousRun continuous_to_schedule(const Subdivision& sub, const TableSet& tables, Problem problem,
                                     const std::array<SpeedProfile, 2>& profiles,
                                     const std::array<NodeId, 2>& starts);

/// Replays `schedule` with run_async on the subdivided graph (no fallback
/// policy). For rendezvous the report is marked COLOCATED if the agents end
/// on one node after the last scheduled move.
RunReport replay_on_subdivision(const Subdivision& sub, const TableSet& tables, Problem problem,
                                const std::array<NodeId, 2>& starts, const Schedule& schedule);

/// Per-agent sequence of original nodes visited in a replay, starting with
/// the start nodes.
std::array<std::vector<NodeId>, 2> original_node_sequences(const Subdivision& sub, const RunReport& report,
                                                           const std::array<NodeId, 2>& starts);

}  // namespace labyrinth
