#include "labyrinth/runner.hpp"

namespace labyrinth {

namespace {

std::vector<bool> active_agents(const World& world, const TableSet& tables) {
  std::vector<bool> active(world.agent_count(), false);
  for (const auto& a : world.agents()) active[a.id] = !a.terminated && a.id < tables.size() && tables[a.id];
  return active;
}

bool any(const std::vector<bool>& v) {
  for (bool b : v) {
    if (b) return true;
  }
  return false;
}

void record(RunReport& report, std::size_t step, MoveRecord rec) {
  ++report.moves;
  report.cost += rec.cost;
  report.trace.push_back(TraceEntry{step, std::move(rec)});
}

RunReport finish(RunReport& report, const World& world, Termination why) {
  report.terminated = why;
  report.final_positions.clear();
  for (const auto& a : world.agents()) report.final_positions.push_back(a.at);
  return std::move(report);
}

bool crossed(const MoveRecord& x, const MoveRecord& y) {
  return x.edge == y.edge && x.passage_out == y.passage_in && y.passage_out == x.passage_in;
}

}  // namespace

std::string to_string(Problem p) {
  switch (p) {
    case Problem::Exploration:
      return "explore";
    case Problem::Rendezvous:
      return "rendezvous";
    case Problem::Dfs:
      return "dfs";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::Sync ? "sync" : "async"; }

std::string to_string(Termination t) {
  switch (t) {
    case Termination::AllStopped:
      return "ALL_STOPPED";
    case Termination::Colocated:
      return "COLOCATED";
    case Termination::EdgeMeeting:
      return "EDGE_MEETING";
    case Termination::CapExceeded:
      return "CAP_EXCEEDED";
    case Termination::ScheduleExhausted:
      return "SCHEDULE_EXHAUSTED";
  }
  return "?";
}

RunReport run_async(World& world, const TableSet& tables, Problem problem, AdversaryPolicy& policy,
                    std::size_t move_cap, const RoundObserver& observer) {
  RunReport report;
  report.problem = problem;
  report.mode = Mode::Async;
  while (true) {
    if (problem == Problem::Rendezvous && colocated(world)) return finish(report, world, Termination::Colocated);
    const auto active = active_agents(world, tables);
    if (!any(active)) return finish(report, world, Termination::AllStopped);
    if (report.moves >= move_cap) return finish(report, world, Termination::CapExceeded);
    const auto id = policy.next(world, active);
    if (!id) return finish(report, world, Termination::ScheduleExhausted);
    if (observer) observer(world);
    if (auto rec = apply_async_move(world, *id, *tables[*id])) record(report, report.moves + 1, std::move(*rec));
  }
}

RunReport run_sync(World& world, const TableSet& tables, Problem problem, std::size_t step_cap,
                   EdgeMeetingRule rule, const RoundObserver& observer) {
  RunReport report;
  report.problem = problem;
  report.mode = Mode::Sync;
  while (true) {
    if (problem == Problem::Rendezvous && colocated(world)) return finish(report, world, Termination::Colocated);
    if (!any(active_agents(world, tables))) return finish(report, world, Termination::AllStopped);
    if (report.steps >= step_cap) return finish(report, world, Termination::CapExceeded);
    if (observer) observer(world);

    auto moves = apply_sync_round(world, tables);
    if (moves.empty()) continue;
    ++report.steps;
    const bool edge_meeting = problem == Problem::Rendezvous && moves.size() == 2 && crossed(moves[0], moves[1]);
    const MoveRecord first = moves[0];
    for (auto& rec : moves) record(report, report.steps, std::move(rec));
    if (!edge_meeting) continue;

    if (rule == EdgeMeetingRule::RendezvousNow) return finish(report, world, Termination::EdgeMeeting);

    // Theseus stays put; Ariadne walks back over the same edge, writing nothing.
    world.agent(1).terminated = true;
    const MoveRecord& out = first.agent == 0 ? first : report.trace.back().move;
    MoveRecord back;
    back.agent = 0;
    back.from = out.to;
    back.passage_out = out.passage_in;
    back.passage_in = out.passage_out;
    back.to = out.from;
    back.edge = out.edge;
    back.row = out.row;
    back.cost = out.cost;
    AgentState& ariadne = world.agent(0);
    ariadne.at = back.to;
    ariadne.arrival = back.passage_in;
    world.count_traversal(back.edge);
    ++report.steps;
    record(report, report.steps, std::move(back));
    return finish(report, world, Termination::Colocated);
  }
}

std::string format_trace(const RunReport& report) {
  std::string out;
  for (const auto& e : report.trace) out += format_trace_line(e.step, e.move) + "\n";
  return out;
}

}  // namespace labyrinth
