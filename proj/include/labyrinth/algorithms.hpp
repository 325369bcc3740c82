#pragma once

#include "labyrinth/policy.hpp"
#include "labyrinth/runner.hpp"
#include "labyrinth/tables.hpp"

#include <memory>
#include <optional>

namespace labyrinth {

struct RunOptions {
  Mode mode = Mode::Async;
  /// Async only; round-robin when unset.
  std::optional<AdversaryPolicy> policy;
  EdgeMeetingRule edge_meeting = EdgeMeetingRule::RendezvousNow;
  /// Moves (async) or time-steps (sync). Defaults: 2m+1 for dfs and
  /// exploration, 3m+1 for rendezvous.
  std::optional<std::size_t> cap;
  RoundObserver observer;
};

World dfs_world(std::shared_ptr<const Graph> graph, NodeId origin);
World exploration_world(std::shared_ptr<const Graph> graph, NodeId origin);
World rendezvous_world(std::shared_ptr<const Graph> graph, NodeId start_a, NodeId start_t);
/// The idler is placed but never marked as having discovered its node, so
/// the mover's depth-first search is not disturbed by it.
World wait_for_mommy_world(std::shared_ptr<const Graph> graph, AgentId mover, NodeId mover_start, NodeId idler_start);

/// Single agent running the depth-first table. Always asynchronous.
/// Checks: dfs_moves = 2m, dfs_cost = 2L, dfs_directed_repeats = 0,
/// dfs_at_origin = 1.
RunReport run_dfs(World& world, const RunOptions& options = {});

/// Both agents share the two-agent exploration table. Throws
/// std::invalid_argument if the agents do not share a start node.
/// Checks: async_moves = 2m or sync_steps = m, exploration_cost <= 2L.
RunReport run_exploration(World& world, const RunOptions& options = {});

/// Agent 0 runs Ariadne, agent 1 Theseus. Checks: async_moves <= 3m and
/// <= 2m+n-1, or sync_steps <= ceil(3m/2) (+1 with the backtrack rule);
/// rendezvous_cost <= 3L; max_edge_traversals <= 3 (async only).
RunReport run_rendezvous(World& world, const RunOptions& options = {});

/// The mover runs the depth-first table and the other agent never moves.
/// Ends COLOCATED when the mover first enters the idler's node.
/// Check: wfm_moves <= 2m.
RunReport wait_for_mommy(World& world, AgentId mover, const RunOptions& options = {});

}  // namespace labyrinth
