#pragma once

#include "labyrinth/graph.hpp"
#include "labyrinth/report.hpp"

#include <stdexcept>
#include <vector>

namespace labyrinth {

class StateSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OptVariant { TraverseAll, ReturnToOrigin };

/// Fewest synchronous rounds in which k omniscient agents (k = 1 or 2),
/// starting together at `origin`, traverse every edge at least once. In a
/// round each agent crosses one incident edge or waits. ReturnToOrigin also
/// requires every agent back at `origin`. Breadth-first over (positions,
/// traversed-edge set); the two agents are interchangeable.
std::size_t brute_force_opt(const Graph& g, std::size_t k, OptVariant variant, NodeId origin,
                            std::size_t state_cap = 8'000'000);

struct CompetitiveReport {
  std::size_t opt_traverse = 0;
  std::size_t opt_return = 0;
  /// Synchronous two-agent exploration time-steps.
  std::size_t steps = 0;
  NodeId meeting_node = 0;
  /// Shortest hop distance from the meeting node back to the origin.
  std::size_t return_leg = 0;
  Rational ratio_traverse{0};
  Rational ratio_return{0};
  std::vector<BoundCheck> checks;
};

/// Runs synchronous exploration from `origin` and compares it with the
/// two-agent optimum of both variants. Unit-weight graphs only.
CompetitiveReport competitive_report(const Graph& g, NodeId origin);

}  // namespace labyrinth
