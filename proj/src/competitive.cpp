#include "labyrinth/algorithms.hpp"
#include "labyrinth/optimum.hpp"

namespace labyrinth {

CompetitiveReport competitive_report(const Graph& g, NodeId origin) {
  if (!g.unit_weights()) throw std::invalid_argument("competitive accounting is defined for unit weights");
  CompetitiveReport r;
  r.opt_traverse = brute_force_opt(g, 2, OptVariant::TraverseAll, origin);
  r.opt_return = brute_force_opt(g, 2, OptVariant::ReturnToOrigin, origin);

  auto shared = std::make_shared<const Graph>(g);
  World world = exploration_world(shared, origin);
  RunOptions options;
  options.mode = Mode::Sync;
  const RunReport run = run_exploration(world, options);
  r.steps = run.steps;
  r.meeting_node = world.agent(0).at;
  r.return_leg = g.hop_distances(r.meeting_node)[origin];

  auto q = [](std::size_t v) { return Rational(static_cast<std::int64_t>(v)); };
  const std::size_t m = g.edge_count();
  const Rational d = g.diameter();
  const std::size_t alg_return = r.steps + r.return_leg;
  r.ratio_traverse = q(r.steps) / q(r.opt_traverse);
  r.ratio_return = q(alg_return) / q(r.opt_return);

  r.checks.push_back(at_most("opt_half_m", q(m) / 2, q(r.opt_traverse)));
  r.checks.push_back(exactly("sync_steps", q(r.steps), q(m)));
  r.checks.push_back(at_most("steps_vs_2opt", q(r.steps), 2 * q(r.opt_traverse)));
  r.checks.push_back(at_most("return_alg_vs_m_plus_d", q(alg_return), q(m) + d));
  r.checks.push_back(at_most("m_plus_d_vs_5/2_opt", q(m) + d, Rational(5, 2) * q(r.opt_return)));
  r.checks.push_back(at_most("return_alg_vs_5/2_opt", q(alg_return), Rational(5, 2) * q(r.opt_return)));
  return r;
}

}  // namespace labyrinth
