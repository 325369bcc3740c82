#include "labyrinth/continuous.hpp"

#include <memory>

namespace labyrinth {

void SpeedProfile::validate() const {
  if (segments.empty()) throw std::invalid_argument("speed profile has no segments");
  for (const auto& [duration, speed] : segments) {
    if (duration <= 0) throw std::invalid_argument("speed profile segment with non-positive duration");
    if (speed < 0) throw std::invalid_argument("speed profile segment with negative speed");
  }
}

Rational SpeedProfile::speed_at(const Rational& t) const {
  Rational start{0};
  for (const auto& [duration, speed] : segments) {
    if (t < start + duration) return speed;
    start += duration;
  }
  return segments.back().second;
}

std::optional<Rational> SpeedProfile::next_moving(const Rational& t) const {
  Rational start{0};
  for (const auto& [duration, speed] : segments) {
    const Rational end = start + duration;
    if (t < end && speed > 0) return t > start ? t : start;
    start = end;
  }
  if (segments.back().second > 0) return t > start ? t : start;
  return std::nullopt;
}

std::optional<Rational> SpeedProfile::reach(const Rational& t, const Rational& distance) const {
  Rational left = distance;
  Rational now = t;
  Rational start{0};
  for (const auto& [duration, speed] : segments) {
    const Rational end = start + duration;
    start = end;
    if (now >= end) continue;
    if (speed > 0) {
      const Rational span = end - now;
      if (speed * span >= left) return now + left / speed;
      left -= speed * span;
    }
    now = end;
  }
  const Rational tail = segments.back().second;
  if (tail > 0) return now + left / tail;
  return std::nullopt;
}

namespace {

struct Walker {
  bool moving = false;
  bool done = false;
  Rational ready{0};
  Rational depart{0};
  Rational arrive{0};
  MoveRecord move;
};

}  // namespace

ContinuousRun continuous_to_schedule(const Subdivision& sub, const TableSet& tables, Problem problem,
                                     const std::array<SpeedProfile, 2>& profiles,
                                     const std::array<NodeId, 2>& starts) {
  for (const auto& p : profiles) p.validate();
  if (tables.size() < 2) throw std::invalid_argument("continuous run needs a table entry per agent");

  // The original graph, rebuilt from the subdivision's halves.
  std::vector<EdgeSpec> specs;
  const Graph& half = sub.graph;
  for (EdgeId e = 0; e + 1 < half.edge_count(); e += 2) {
    const Edge& a = half.edge(e);
    const Edge& b = half.edge(e + 1);
    specs.push_back({a.ends[0].node, a.ends[0].port, b.ends[1].node, b.ends[1].port, a.weight + b.weight});
  }
  auto graph = std::make_shared<const Graph>(Graph::build(sub.original_nodes, specs));
  World world(graph, {starts[0], starts[1]});

  ContinuousRun run;
  std::array<Walker, 2> walkers;
  for (AgentId i = 0; i < 2; ++i) {
    run.nodes[i].push_back(starts[i]);
    walkers[i].done = !tables[i];
    if (!tables[i]) world.agent(i).terminated = true;
  }

  auto at_same_node = [&] {
    return !walkers[0].moving && !walkers[1].moving && world.agent(0).at == world.agent(1).at;
  };

  const std::size_t event_cap = 64 * (graph->edge_count() + 1) + 64;
  std::size_t events = 0;
  while (true) {
    if (problem == Problem::Rendezvous && at_same_node()) {
      run.colocated = true;
      break;
    }
    if (walkers[0].done && walkers[1].done) break;

    // Next event per agent: arrival if moving, else the next moving instant.
    std::optional<Rational> when[2];
    for (AgentId i = 0; i < 2; ++i) {
      const Walker& w = walkers[i];
      if (w.done) continue;
      when[i] = w.moving ? std::optional<Rational>(w.arrive) : profiles[i].next_moving(w.ready);
    }
    if (!when[0] && !when[1]) {
      // One agent done and the other frozen for good: the schedule just ends.
      if (walkers[0].done || walkers[1].done) break;
      throw ZeroSpeedDeadlock("both agents are stalled at time " + to_string(run.end_time));
    }
    // Earliest first; at equal times arrivals go before departures, then
    // agent 0 before agent 1.
    auto before = [&](AgentId x, AgentId y) {
      if (*when[x] != *when[y]) return *when[x] < *when[y];
      if (walkers[x].moving != walkers[y].moving) return walkers[x].moving;
      return x < y;
    };
    const AgentId id = (!when[1] || (when[0] && before(0, 1))) ? 0 : 1;
    const Rational now = *when[id];
    Walker& w = walkers[id];
    if (++events > event_cap) throw std::runtime_error("continuous run exceeded its event cap");

    if (w.moving) {
      complete_move(world, w.move, *tables[id]);
      w.moving = false;
      w.ready = now;
      run.schedule.turns.push_back(id);
      run.nodes[id].push_back(w.move.to);
      run.energy += w.move.cost;
      run.end_time = now;
      continue;
    }

    // Departure. Entering an edge the other agent is still inside puts both
    // on one midpoint of the subdivided graph. For rendezvous that is the
    // meeting: the half-move is kept so the replay ends co-located there.
    // Exploration stops before a crossing in opposite directions or an
    // overtake, the cases where the midpoint changes what the agents do.
    bool encounter = false;
    if (auto choice = select_row(*tables[id], world, id)) {
      const AgentId other_id = 1 - id;
      const Walker& other = walkers[other_id];
      const EdgeId e = graph->edge_at(choice->passage);
      if (other.moving && other.move.edge == e && other.arrive > now) {
        const bool opposite = other.move.passage_in == choice->passage;
        const auto mine = profiles[id].reach(now, graph->edge(e).weight);
        const bool overtakes = *mine < other.arrive || (*mine == other.arrive && id < other_id);
        if (problem == Problem::Rendezvous) {
          encounter = true;
          run.opposite_encounter = opposite;
        } else if (opposite || overtakes) {
          run.edge_encounter = true;
          run.opposite_encounter = opposite;
          run.end_time = now;
          run.explored_at_encounter = world.traversals(e) == 0 || opposite;
          for (const Edge& x : graph->edges()) {
            if (x.id != e && world.traversals(x.id) != 2) run.explored_at_encounter = false;
          }
          break;
        }
      }
    }
    auto rec = begin_move(world, id, *tables[id]);
    run.end_time = now;
    if (!rec) {
      w.done = true;
      continue;
    }
    const auto arrival = profiles[id].reach(now, rec->cost);
    w.move = std::move(*rec);
    w.moving = true;
    w.depart = now;
    // reach() cannot fail here: speed is positive at `now`.
    w.arrive = *arrival;
    run.schedule.turns.push_back(id);
    if (encounter) {
      run.edge_encounter = true;
      run.colocated = true;
      break;
    }
  }
  return run;
}

RunReport replay_on_subdivision(const Subdivision& sub, const TableSet& tables, Problem problem,
                                const std::array<NodeId, 2>& starts, const Schedule& schedule) {
  World world(std::make_shared<const Graph>(sub.graph), {starts[0], starts[1]});
  auto policy = AdversaryPolicy::fixed(schedule);
  RunReport report = run_async(world, tables, problem, policy, schedule.turns.size() + 1);
  if (problem == Problem::Rendezvous && report.terminated == Termination::ScheduleExhausted && colocated(world)) {
    report.terminated = Termination::Colocated;
  }
  return report;
}

std::array<std::vector<NodeId>, 2> original_node_sequences(const Subdivision& sub, const RunReport& report,
                                                           const std::array<NodeId, 2>& starts) {
  std::array<std::vector<NodeId>, 2> out{std::vector<NodeId>{starts[0]}, std::vector<NodeId>{starts[1]}};
  for (const auto& e : report.trace) {
    if (sub.is_original(e.move.to)) out[e.move.agent].push_back(e.move.to);
  }
  return out;
}

}  // namespace labyrinth
