#include "labyrinth/schedule_search.hpp"

#include <limits>
#include <unordered_map>

namespace labyrinth {

namespace {

struct Summary {
  std::size_t min_moves = 0;
  std::size_t max_moves = 0;
  Rational min_cost{0};
  Rational max_cost{0};
  // Next agent along the extremal and failing continuations; kNone at leaves.
  AgentId arg_max_moves = kNone;
  AgentId arg_max_cost = kNone;
  AgentId arg_failure = kNone;
  std::uint64_t schedules = 1;
  bool ok = true;

  static constexpr AgentId kNone = 0xFF;
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

class Searcher {
 public:
  Searcher(const TableSet& tables, Problem problem, const SearchOptions& options)
      : tables_(tables), problem_(problem), options_(options) {}

  const Summary& visit(const World& world, std::size_t depth) {
    std::string key = world.state_key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= options_.state_cap) {
      throw DepthCapExceeded("schedule search visited more than " + std::to_string(options_.state_cap) + " states");
    }

    Summary s;
    if (auto end = terminal(world)) {
      if (options_.terminal_check) s.ok = options_.terminal_check(world, *end);
      return memo_.emplace(std::move(key), s).first->second;
    }
    if (depth > options_.depth_cap) {
      throw DepthCapExceeded("schedule longer than " + std::to_string(options_.depth_cap) + " moves");
    }
    const bool state_ok = !options_.state_check || options_.state_check(world);

    bool first = true;
    s.schedules = 0;
    for (const auto& agent : world.agents()) {
      const AgentId id = agent.id;
      if (agent.terminated || id >= tables_.size() || !tables_[id]) continue;
      World next = world;
      auto rec = apply_async_move(next, id, *tables_[id]);
      const std::size_t moves = rec ? 1 : 0;
      const Rational cost = rec ? rec->cost : Rational(0);
      const Summary& child = visit(next, depth + moves);

      const std::size_t lo = child.min_moves + moves;
      const std::size_t hi = child.max_moves + moves;
      const Rational clo = child.min_cost + cost;
      const Rational chi = child.max_cost + cost;
      if (first || lo < s.min_moves) s.min_moves = lo;
      if (first || hi > s.max_moves) {
        s.max_moves = hi;
        s.arg_max_moves = id;
      }
      if (first || clo < s.min_cost) s.min_cost = clo;
      if (first || chi > s.max_cost) {
        s.max_cost = chi;
        s.arg_max_cost = id;
      }
      if (!child.ok && s.ok) {
        s.ok = false;
        s.arg_failure = id;
      }
      s.schedules = saturating_add(s.schedules, child.schedules);
      first = false;
    }
    if (!state_ok) {
      s.ok = false;
      s.arg_failure = Summary::kNone;
    }
    return memo_.emplace(std::move(key), s).first->second;
  }

  /// Follows the stored choices from `start` to a leaf.
  Schedule witness(const World& start, AgentId Summary::*choice) const {
    Schedule out;
    World world = start;
    while (true) {
      const auto it = memo_.find(world.state_key());
      if (it == memo_.end()) break;
      const AgentId id = it->second.*choice;
      if (id == Summary::kNone) break;
      out.turns.push_back(id);
      apply_async_move(world, id, *tables_[id]);
    }
    return out;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  std::optional<Termination> terminal(const World& world) const {
    if (problem_ == Problem::Rendezvous && colocated(world)) return Termination::Colocated;
    for (const auto& a : world.agents()) {
      if (!a.terminated && a.id < tables_.size() && tables_[a.id]) return std::nullopt;
    }
    return Termination::AllStopped;
  }

  const TableSet& tables_;
  Problem problem_;
  const SearchOptions& options_;
  std::unordered_map<std::string, Summary> memo_;
};

}  // namespace

SearchResult enumerate_schedules(const World& start, const TableSet& tables, Problem problem,
                                 const SearchOptions& options) {
  Searcher searcher(tables, problem, options);
  const Summary root = searcher.visit(start, 0);
  SearchResult r;
  r.min_moves = root.min_moves;
  r.max_moves = root.max_moves;
  r.min_cost = root.min_cost;
  r.max_cost = root.max_cost;
  r.max_moves_witness = searcher.witness(start, &Summary::arg_max_moves);
  r.max_cost_witness = searcher.witness(start, &Summary::arg_max_cost);
  r.states = searcher.states();
  r.schedules = root.schedules;
  r.checks_passed = root.ok;
  if (!root.ok) r.failure_witness = searcher.witness(start, &Summary::arg_failure);
  return r;
}

WorstCase worst_case_search(const World& start, const TableSet& tables, Problem problem, Metric metric,
                            std::size_t depth_cap) {
  SearchOptions options;
  options.depth_cap = depth_cap;
  const SearchResult r = enumerate_schedules(start, tables, problem, options);
  if (metric == Metric::Moves) return WorstCase{Rational(static_cast<std::int64_t>(r.max_moves)), r.max_moves_witness};
  return WorstCase{r.max_cost, r.max_cost_witness};
}

}  // namespace labyrinth
