#pragma once

#include "labyrinth/engine.hpp"
#include "labyrinth/runner.hpp"
#include "labyrinth/schedule.hpp"

#include <functional>
#include <stdexcept>

namespace labyrinth {

class DepthCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Metric { Moves, Cost };

/// Judges a terminal world (every schedule ends in one).
using TerminalCheck = std::function<bool(const World&, Termination)>;
/// Judges every reachable pre-turn state.
using StateCheck = std::function<bool(const World&)>;

struct SearchOptions {
  /// Longest schedule explored, in moves.
  std::size_t depth_cap = 64;
  /// Distinct states before giving up.
  std::size_t state_cap = 2'000'000;
  TerminalCheck terminal_check;
  StateCheck state_check;
};

struct SearchResult {
  std::size_t min_moves = 0;
  std::size_t max_moves = 0;
  Rational min_cost{0};
  Rational max_cost{0};
  Schedule max_moves_witness;
  Schedule max_cost_witness;
  /// Distinct world states visited.
  std::size_t states = 0;
  /// Complete schedules (saturates at UINT64_MAX).
  std::uint64_t schedules = 0;
  /// False if some reachable state or terminal failed its check.
  bool checks_passed = true;
  Schedule failure_witness;
};

/// Enumerates every asynchronous schedule from `start`, merging prefixes that
/// reach the same world state. A schedule ends when the run would end
/// (all agents stopped, or co-located for rendezvous); STOP turns are
/// schedule entries. Throws DepthCapExceeded past either cap.
SearchResult enumerate_schedules(const World& start, const TableSet& tables, Problem problem,
                                 const SearchOptions& options = {});

struct WorstCase {
  Rational value{0};
  Schedule witness;
};

WorstCase worst_case_search(const World& start, const TableSet& tables, Problem problem, Metric metric,
                            std::size_t depth_cap);

}  // namespace labyrinth
