#include "labyrinth/algorithms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace labyrinth {

namespace {

Rational count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

RunReport drive(World& world, const TableSet& tables, Problem problem, const RunOptions& options,
                std::size_t default_cap) {
  const std::size_t cap = options.cap.value_or(default_cap);
  if (options.mode == Mode::Sync) return run_sync(world, tables, problem, cap, options.edge_meeting, options.observer);
  AdversaryPolicy policy = options.policy.value_or(AdversaryPolicy::round_robin());
  return run_async(world, tables, problem, policy, cap, options.observer);
}

}  // namespace

World dfs_world(std::shared_ptr<const Graph> graph, NodeId origin) { return World(std::move(graph), {origin}); }

World exploration_world(std::shared_ptr<const Graph> graph, NodeId origin) {
  return World(std::move(graph), {origin, origin});
}

World rendezvous_world(std::shared_ptr<const Graph> graph, NodeId start_a, NodeId start_t) {
  if (start_a == start_t) throw std::invalid_argument("rendezvous needs two distinct start nodes");
  return World(std::move(graph), {start_a, start_t});
}

World wait_for_mommy_world(std::shared_ptr<const Graph> graph, AgentId mover, NodeId mover_start,
                           NodeId idler_start) {
  if (mover > 1) throw std::invalid_argument("mover must be agent 0 or 1");
  if (mover_start == idler_start) throw std::invalid_argument("wait-for-mommy needs two distinct start nodes");
  std::vector<NodeId> starts(2);
  std::vector<bool> seed(2, false);
  starts[mover] = mover_start;
  starts[1 - mover] = idler_start;
  seed[mover] = true;
  return World(std::move(graph), starts, seed);
}

RunReport run_dfs(World& world, const RunOptions& options) {
  if (world.agent_count() != 1) throw std::invalid_argument("depth-first search runs a single agent");
  const Graph& g = world.graph();
  const NodeId origin = world.agent(0).at;
  RunOptions async = options;
  async.mode = Mode::Async;
  RunReport r = drive(world, {&tremaux_table()}, Problem::Dfs, async, 2 * g.edge_count() + 1);

  std::set<std::pair<Passage, Passage>> directed;
  std::size_t repeats = 0;
  for (const auto& e : r.trace) {
    if (!directed.emplace(e.move.passage_out, e.move.passage_in).second) ++repeats;
  }
  r.checks.push_back(exactly("dfs_moves", count(r.moves), count(2 * g.edge_count())));
  r.checks.push_back(exactly("dfs_cost", r.cost, 2 * g.total_length()));
  r.checks.push_back(exactly("dfs_directed_repeats", count(repeats), 0));
  r.checks.push_back(exactly("dfs_at_origin", count(world.agent(0).at == origin), 1));
  return r;
}

RunReport run_exploration(World& world, const RunOptions& options) {
  if (world.agent_count() != 2 || world.agent(0).at != world.agent(1).at) {
    throw std::invalid_argument("two-agent exploration needs both agents on one start node");
  }
  const Graph& g = world.graph();
  const std::size_t m = g.edge_count();
  const TableSet tables{&exploration_table(), &exploration_table()};
  RunReport r = drive(world, tables, Problem::Exploration, options, 2 * m + 1);
  if (options.mode == Mode::Sync) {
    r.checks.push_back(exactly("sync_steps", count(r.steps), count(m)));
  } else {
    r.checks.push_back(exactly("async_moves", count(r.moves), count(2 * m)));
  }
  r.checks.push_back(at_most("exploration_cost", r.cost, 2 * g.total_length()));
  r.checks.push_back(exactly("colocated", count(colocated(world)), 1));
  return r;
}

RunReport run_rendezvous(World& world, const RunOptions& options) {
  if (world.agent_count() != 2) throw std::invalid_argument("rendezvous runs two agents");
  const Graph& g = world.graph();
  const std::size_t m = g.edge_count();
  const std::size_t n = g.node_count();
  const TableSet tables{&ariadne_table(), &theseus_table()};
  RunReport r = drive(world, tables, Problem::Rendezvous, options, 3 * m + 1);
  if (options.mode == Mode::Sync) {
    const std::size_t extra = options.edge_meeting == EdgeMeetingRule::BacktrackPlusOne ? 1 : 0;
    r.checks.push_back(at_most("sync_steps", count(r.steps), count((3 * m + 1) / 2 + extra)));
  } else {
    r.checks.push_back(at_most("async_moves_3m", count(r.moves), count(3 * m)));
    r.checks.push_back(at_most("async_moves_2m_n", count(r.moves), count(2 * m + n - 1)));
  }
  r.checks.push_back(at_most("rendezvous_cost", r.cost, 3 * g.total_length()));
  if (options.mode == Mode::Async) {
    const auto& t = world.traversal_counts();
    const std::uint32_t most = t.empty() ? 0 : *std::max_element(t.begin(), t.end());
    r.checks.push_back(at_most("max_edge_traversals", count(most), 3));
  }
  const bool met = r.terminated == Termination::Colocated || r.terminated == Termination::EdgeMeeting;
  r.checks.push_back(exactly("met", count(met), 1));
  return r;
}

RunReport wait_for_mommy(World& world, AgentId mover, const RunOptions& options) {
  if (world.agent_count() != 2 || mover > 1) throw std::invalid_argument("wait-for-mommy runs two agents");
  const Graph& g = world.graph();
  TableSet tables(2, nullptr);
  tables[mover] = &tremaux_table();
  world.agent(1 - mover).terminated = true;
  RunOptions async = options;
  async.mode = Mode::Async;
  RunReport r = drive(world, tables, Problem::Rendezvous, async, 2 * g.edge_count() + 1);
  r.checks.push_back(at_most("wfm_moves", count(r.moves), count(2 * g.edge_count())));
  r.checks.push_back(exactly("met", count(r.terminated == Termination::Colocated), 1));
  return r;
}

}  // namespace labyrinth
