#include "labyrinth/engine.hpp"

#include <map>

namespace labyrinth {

namespace {

bool holds(const Condition& c, const World& world, Passage arrival) {
  switch (c.kind) {
    case Condition::Kind::Any:
      return true;
    case Condition::Kind::ArrivalMarker:
      return world.marker(arrival) == c.marker;
    case Condition::Kind::Discovered:
      return world.ledger().discovered(c.discovery, arrival.node);
    case Condition::Kind::Undiscovered:
      return !world.ledger().discovered(c.discovery, arrival.node);
  }
  return false;
}

// Step S4: among the rows sharing the selected row's (read_u, write_u), the
// first whose arrival condition holds decides the S5 write.
std::size_t resolve_arrival(const NavigationTable& table, std::size_t selected, const World& world,
                            Passage arrival) {
  const auto& rows = table.rows();
  const NavRow& head = rows[selected];
  for (std::size_t i = selected; i < rows.size(); ++i) {
    if (rows[i].read_u != head.read_u || rows[i].write_u != head.write_u) continue;
    if (holds(rows[i].cond_v, world, arrival)) return i;
  }
  throw EngineError(EngineError::Kind::CondFallthrough,
                    table.name() + ": no row for read " + std::string(spelling(head.read_u)) + " accepts arrival at " +
                        to_string(arrival) + " (marker " + std::string(spelling(world.marker(arrival))) + ")");
}

MoveRecord start_record(const World& world, AgentId agent, const RowChoice& choice) {
  const Graph& g = world.graph();
  MoveRecord rec;
  rec.agent = agent;
  rec.from = world.agent(agent).at;
  rec.passage_out = choice.passage;
  rec.passage_in = g.opposite(choice.passage);
  rec.to = rec.passage_in.node;
  rec.edge = g.edge_at(choice.passage);
  rec.row = choice.row;
  rec.cost = g.edge(rec.edge).weight;
  return rec;
}

void finish_move(World& world, const MoveRecord& rec) {
  AgentState& a = world.agent(rec.agent);
  world.ledger().discover(rec.agent, rec.to);
  a.at = rec.to;
  a.arrival = rec.passage_in;
  world.count_traversal(rec.edge);
}

class PhaseWrites {
 public:
  explicit PhaseWrites(const char* phase) : phase_(phase) {}

  void add(World& world, Passage p, Marker m) {
    const std::size_t key = world.graph().passage_index(p);
    auto [it, inserted] = seen_.emplace(key, m);
    if (!inserted && it->second != m) {
      throw EngineError(EngineError::Kind::ConflictingWrite,
                        std::string(phase_) + ": passage " + to_string(p) + " written as both " +
                            std::string(spelling(it->second)) + " and " + std::string(spelling(m)));
    }
    world.set_marker(p, m);
  }

 private:
  const char* phase_;
  std::map<std::size_t, Marker> seen_;
};

}  // namespace

std::optional<RowChoice> select_row(const NavigationTable& table, const World& world, AgentId agent) {
  const Graph& g = world.graph();
  const NodeId at = world.agent(agent).at;
  const std::size_t degree = g.degree(at);
  const auto& rows = table.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool repeat = false;
    for (std::size_t j = 0; j < i && !repeat; ++j) repeat = rows[j].read_u == rows[i].read_u;
    if (repeat) continue;
    for (Port p = 0; p < degree; ++p) {
      if (world.marker(Passage{at, p}) == rows[i].read_u) return RowChoice{i, Passage{at, p}};
    }
  }
  return std::nullopt;
}

std::optional<MoveRecord> begin_move(World& world, AgentId agent, const NavigationTable& table) {
  auto choice = select_row(table, world, agent);
  if (!choice) {
    world.agent(agent).terminated = true;
    return std::nullopt;
  }
  MoveRecord rec = start_record(world, agent, *choice);
  if (const auto& w = table.rows()[choice->row].write_u) {
    world.set_marker(rec.passage_out, *w);
    rec.writes.emplace_back(rec.passage_out, *w);
  }
  return rec;
}

void complete_move(World& world, MoveRecord& rec, const NavigationTable& table) {
  rec.row = resolve_arrival(table, rec.row, world, rec.passage_in);
  if (const auto& w = table.rows()[rec.row].write_v) {
    world.set_marker(rec.passage_in, *w);
    rec.writes.emplace_back(rec.passage_in, *w);
  }
  finish_move(world, rec);
}

std::optional<MoveRecord> apply_async_move(World& world, AgentId agent, const NavigationTable& table) {
  auto rec = begin_move(world, agent, table);
  if (rec) complete_move(world, *rec, table);
  return rec;
}

std::vector<MoveRecord> apply_sync_round(World& world, const TableSet& tables) {
  std::vector<AgentId> active;
  for (const auto& a : world.agents()) {
    if (!a.terminated && a.id < tables.size() && tables[a.id]) active.push_back(a.id);
  }

  std::vector<MoveRecord> out;
  if (active.size() == 2 && world.agent(active[0]).at == world.agent(active[1]).at) {
    for (AgentId id : active) {
      if (auto rec = apply_async_move(world, id, *tables[id])) out.push_back(std::move(*rec));
    }
    return out;
  }

  // S1 for everyone against the same snapshot.
  std::vector<std::pair<MoveRecord, const NavigationTable*>> pending;
  for (AgentId id : active) {
    auto choice = select_row(*tables[id], world, id);
    if (!choice) {
      world.agent(id).terminated = true;
      continue;
    }
    pending.emplace_back(start_record(world, id, *choice), tables[id]);
  }

  PhaseWrites s2("S2");
  for (auto& [rec, table] : pending) {
    if (const auto& w = table->rows()[rec.row].write_u) {
      s2.add(world, rec.passage_out, *w);
      rec.writes.emplace_back(rec.passage_out, *w);
    }
  }

  for (auto& [rec, table] : pending) rec.row = resolve_arrival(*table, rec.row, world, rec.passage_in);

  PhaseWrites s5("S5");
  for (auto& [rec, table] : pending) {
    if (const auto& w = table->rows()[rec.row].write_v) {
      s5.add(world, rec.passage_in, *w);
      rec.writes.emplace_back(rec.passage_in, *w);
    }
  }
  for (auto& [rec, table] : pending) {
    finish_move(world, rec);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string format_trace_line(std::size_t step, const MoveRecord& move) {
  std::string w1 = "-";
  std::string w2 = "-";
  for (const auto& [p, m] : move.writes) {
    std::string text = to_string(p) + "=" + std::string(spelling(m));
    if (p == move.passage_out) {
      w1 = std::move(text);
    } else {
      w2 = std::move(text);
    }
  }
  return std::to_string(step) + "\t" + std::to_string(move.agent) + "\t" + std::to_string(move.from) + "\t" +
         std::to_string(move.passage_out.port) + "\t" + std::to_string(move.to) + "\t" +
         std::to_string(move.passage_in.port) + "\t" + std::to_string(move.row) + "\t" + w1 + "\t" + w2;
}

}  // namespace labyrinth
