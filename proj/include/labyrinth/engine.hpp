#pragma once

#include "labyrinth/nav_table.hpp"
#include "labyrinth/world.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace labyrinth {

/// Navigation table for each agent id. A null entry is an agent that never
/// moves (the idler of wait-for-mommy).
using TableSet = std::vector<const NavigationTable*>;

class EngineError : public std::runtime_error {
 public:
  enum class Kind { CondFallthrough, ConflictingWrite };
  EngineError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Outcome of step S1: the first row (by priority) whose read_u marker lies on
/// some passage at the agent's node, and the lowest such port.
struct RowChoice {
  std::size_t row = 0;
  Passage passage;
};

struct MoveRecord {
  AgentId agent = 0;
  NodeId from = 0;
  Passage passage_out;
  Passage passage_in;
  NodeId to = 0;
  EdgeId edge = 0;
  /// Index of the row that fired (the one whose arrival condition matched).
  std::size_t row = 0;
  std::vector<std::pair<Passage, Marker>> writes;
  Rational cost{0};
};

/// Step S1. nullopt means STOP.
std::optional<RowChoice> select_row(const NavigationTable& table, const World& world, AgentId agent);

/// Steps S1 and S2 only: the agent has chosen a passage and written on it but
/// not yet arrived. nullopt on STOP (agent marked terminated). `row` of the
/// returned record is the selected row until complete_move resolves it.
std::optional<MoveRecord> begin_move(World& world, AgentId agent, const NavigationTable& table);

/// Steps S4 and S5 for a move started by begin_move, then the position and
/// discovery updates.
void complete_move(World& world, MoveRecord& rec, const NavigationTable& table);

/// Steps S1-S5 for one agent without interruption. Returns nullopt on STOP,
/// after marking the agent terminated. Throws EngineError(CondFallthrough)
/// when no row of the chosen group accepts what the agent finds on arrival.
std::optional<MoveRecord> apply_async_move(World& world, AgentId agent, const NavigationTable& table);

/// One synchronous time-step. Co-located agents move one after the other
/// (agent 0 first, each as a full S1-S5 atom). Otherwise the phases run
/// across agents: all S1, all S2 writes, all traversals, all S4 reads (which
/// see every S2 write of the round), then S5 writes and discoveries.
/// Terminated agents are skipped. Throws EngineError(ConflictingWrite) if two
/// agents write different markers to one passage within a phase.
std::vector<MoveRecord> apply_sync_round(World& world, const TableSet& tables);

/// `step agent from port_out to port_in row w1 w2`, tab-separated; writes are
/// `node:port=MARKER` or `-`.
std::string format_trace_line(std::size_t step, const MoveRecord& move);

}  // namespace labyrinth
