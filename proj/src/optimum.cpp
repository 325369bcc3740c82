#include "labyrinth/optimum.hpp"

#include <unordered_set>

namespace labyrinth {

namespace {

struct Step {
  NodeId to;
  EdgeId edge;
};

}  // namespace

std::size_t brute_force_opt(const Graph& g, std::size_t k, OptVariant variant, NodeId origin, std::size_t state_cap) {
  if (k != 1 && k != 2) throw std::invalid_argument("brute_force_opt supports one or two agents");
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  if (origin >= n) throw std::invalid_argument("origin is not in the graph");
  if (m > 40) throw StateSpaceTooLarge("too many edges for an exhaustive optimum");

  std::vector<std::vector<Step>> moves(n);
  for (const Edge& e : g.edges()) {
    moves[e.ends[0].node].push_back({e.ends[1].node, e.id});
    if (e.ends[0].node != e.ends[1].node) moves[e.ends[1].node].push_back({e.ends[0].node, e.id});
  }

  const std::uint64_t full = m == 64 ? ~0ULL : (1ULL << m) - 1;
  auto encode = [&](NodeId a, NodeId b, std::uint64_t mask) {
    if (a > b) std::swap(a, b);
    return (mask * n + a) * n + b;
  };
  auto done = [&](NodeId a, NodeId b, std::uint64_t mask) {
    if (mask != full) return false;
    return variant == OptVariant::TraverseAll || (a == origin && b == origin);
  };

  struct State {
    NodeId a, b;
    std::uint64_t mask;
  };
  // With one agent the second position is pinned to the first.
  const NodeId b0 = origin;
  std::vector<State> frontier{{origin, b0, 0}};
  std::unordered_set<std::uint64_t> seen{encode(origin, b0, 0)};
  for (std::size_t round = 0;; ++round) {
    for (const State& s : frontier) {
      if (done(s.a, s.b, s.mask)) return round;
    }
    if (frontier.empty()) throw std::logic_error("optimum search ran dry");
    std::vector<State> next;
    auto push = [&](NodeId a, NodeId b, std::uint64_t mask) {
      if (seen.insert(encode(a, b, mask)).second) {
        if (seen.size() > state_cap) throw StateSpaceTooLarge("optimum search exceeded its state cap");
        next.push_back({a, b, mask});
      }
    };
    for (const State& s : frontier) {
      if (k == 1) {
        for (const Step& x : moves[s.a]) push(x.to, x.to, s.mask | (1ULL << x.edge));
        continue;
      }
      push(s.a, s.b, s.mask);
      for (const Step& x : moves[s.a]) {
        push(x.to, s.b, s.mask | (1ULL << x.edge));
        for (const Step& y : moves[s.b]) push(x.to, y.to, s.mask | (1ULL << x.edge) | (1ULL << y.edge));
      }
      for (const Step& y : moves[s.b]) push(s.a, y.to, s.mask | (1ULL << y.edge));
    }
    frontier = std::move(next);
  }
}

}  // namespace labyrinth
