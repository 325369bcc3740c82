#include "labyrinth/gadgets.hpp"

#include "labyrinth/tables.hpp"

namespace labyrinth {

std::vector<GadgetScenario> gadget_scenarios() {
  const auto unit = SpeedProfile::constant(Rational(1));
  std::vector<GadgetScenario> out;
  out.push_back({"line_L4", line_graph(4), Problem::Exploration, {0, 0}, {unit, unit}});
  const Rational lengths[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(2)};
  const Rational segment_weights[] = {lengths[1], lengths[3], lengths[0]};
  out.push_back({"line_mixed", line_graph(3, segment_weights), Problem::Exploration, {0, 0}, {unit, unit}});
  for (int l = 1; l <= 3; ++l) {
    const Rational w(l);
    out.push_back({"cycle_" + std::to_string(l), cycle_gadget(w, w, false).graph, Problem::Rendezvous, {0, 1},
                   {unit, unit}});
  }
  out.push_back({"broken_cycle_1", cycle_gadget(1, 1, true).graph, Problem::Rendezvous, {0, 1}, {unit, unit}});
  out.push_back({"cycle_1_3", cycle_gadget(1, 3, false).graph, Problem::Rendezvous, {0, 1}, {unit, unit}});
  out.push_back({"broken_cycle_2_1", cycle_gadget(2, 1, true).graph, Problem::Rendezvous, {0, 1}, {unit, unit}});
  // Theseus twice as fast on the cycle.
  out.push_back({"cycle_1_fast_t", cycle_gadget(1, 1, false).graph, Problem::Rendezvous, {0, 1},
                 {unit, SpeedProfile::constant(Rational(2))}});
  return out;
}

GadgetOutcome run_gadget_scenario(const GadgetScenario& s) {
  const Subdivision sub = subdivide(s.graph);
  TableSet tables;
  if (s.problem == Problem::Exploration) {
    tables = {&exploration_table(), &exploration_table()};
  } else {
    tables = {&ariadne_table(), &theseus_table()};
  }
  GadgetOutcome out;
  out.continuous = continuous_to_schedule(sub, tables, s.problem, s.profiles, s.starts);
  out.replay = replay_on_subdivision(sub, tables, s.problem, s.starts, out.continuous.schedule);
  const Rational l = s.graph.total_length();
  if (s.problem == Problem::Exploration) {
    out.checks.push_back(exactly(s.name + "_exploration_cost", out.replay.cost, 2 * l));
  } else {
    out.checks.push_back(at_most(s.name + "_rendezvous_cost", out.replay.cost, 3 * l));
    const bool met = out.replay.terminated == Termination::Colocated;
    out.checks.push_back(exactly(s.name + "_met", Rational(met ? 1 : 0), 1));
  }
  return out;
}

}  // namespace labyrinth
