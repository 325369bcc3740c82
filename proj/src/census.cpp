#include "labyrinth/census.hpp"

#include <algorithm>

namespace labyrinth {

std::optional<int> marker_class(CensusAlphabet alphabet, Marker m) {
  using M = Marker;
  if (m == M::Empty) return 0;
  if (alphabet == CensusAlphabet::Exploration) {
    switch (m) {
      case M::B:
      case M::E:
      case M::F:
        return 1;
      case M::D:
        return 2;
      default:
        return std::nullopt;
    }
  }
  switch (m) {
    case M::BA:
    case M::EA:
    case M::FA:
    case M::BT:
    case M::ET:
    case M::FT:
      return 1;
    case M::EAT:
    case M::FAT:
    case M::D:
      return 2;
    case M::EATT:
    case M::FATT:
    case M::Dp:
      return 3;
    default:
      return std::nullopt;
  }
}

MarkerCensus check_marker_census(const World& world, CensusAlphabet alphabet) {
  MarkerCensus census;
  const Graph& g = world.graph();
  for (const Edge& e : g.edges()) {
    EdgeCensus c;
    c.edge = e.id;
    c.traversals = world.traversals(e.id);
    c.markers = {world.marker(e.ends[0]), world.marker(e.ends[1])};
    const auto k0 = marker_class(alphabet, c.markers[0]);
    const auto k1 = marker_class(alphabet, c.markers[1]);
    if (k0 && k0 == k1) c.marker_class = k0;
    if (!census.offending && c.marker_class != std::optional<int>(static_cast<int>(c.traversals))) {
      census.offending = e.id;
      census.detail = "edge " + std::to_string(e.id) + " (" + to_string(e.ends[0]) + " " +
                      std::string(spelling(c.markers[0])) + ", " + to_string(e.ends[1]) + " " +
                      std::string(spelling(c.markers[1])) + ") traversed " + std::to_string(c.traversals) + " times";
    }
    census.edges.push_back(c);
  }
  return census;
}

void require_marker_census(const World& world, CensusAlphabet alphabet) {
  auto census = check_marker_census(world, alphabet);
  if (!census.passed()) throw CensusViolation(*census.offending, "CensusViolation: " + census.detail);
}

PathCheck check_path_invariant(const World& world) {
  PathCheck out;
  const Graph& g = world.graph();
  if (world.agent_count() != 2) {
    out.reason = "path invariant needs two agents";
    return out;
  }
  const NodeId a = world.agent(0).at;
  const NodeId b = world.agent(1).at;
  for (const Edge& e : g.edges()) {
    if (world.traversals(e.id) == 1) out.once.push_back(e.id);
  }
  if (out.once.empty()) {
    if (a != b) out.reason = "no once-traversed edges but agents apart";
    return out;
  }

  std::vector<std::size_t> degree(g.node_count(), 0);
  std::vector<NodeId> parent(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId id : out.once) {
    const Edge& e = g.edge(id);
    ++degree[e.ends[0].node];
    ++degree[e.ends[1].node];
    parent[find(e.ends[0].node)] = find(e.ends[1].node);
  }

  const NodeId root = find(g.edge(out.once.front()).ends[0].node);
  for (EdgeId id : out.once) {
    if (find(g.edge(id).ends[0].node) != root) {
      out.reason = "once-traversed edges are not connected";
      return out;
    }
  }
  if (find(a) != root || degree[a] == 0 || find(b) != root || degree[b] == 0) {
    out.reason = "once-traversed edges miss an agent position";
    return out;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const bool odd = degree[v] % 2 == 1;
    const bool end = a != b && (v == a || v == b);
    if (odd != end) {
      out.reason = "node " + std::to_string(v) + " has degree " + std::to_string(degree[v]) +
                   " in the once-traversed edges";
      return out;
    }
  }
  return out;
}

void require_path_invariant(const World& world) {
  auto check = check_path_invariant(world);
  if (!check.passed()) throw PathViolation(check.once, "PathViolation: " + check.reason);
}

TerminationCheck check_termination(const World& world, const RunReport& report) {
  TerminationCheck out;
  if (report.terminated == Termination::CapExceeded) {
    out.reason = "run hit its cap";
    return out;
  }
  const Graph& g = world.graph();
  auto all_twice = [&] {
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return world.traversals(e.id) == 2; });
  };
  switch (report.problem) {
    case Problem::Dfs:
      if (!all_twice()) out.reason = "some edge not traversed exactly twice";
      break;
    case Problem::Exploration:
      if (!colocated(world)) {
        out.reason = "agents stopped on different nodes";
      } else if (!all_twice()) {
        out.reason = "some edge not traversed exactly twice";
      } else {
        for (std::size_t p = 0; p < g.passage_count(); ++p) {
          if (world.boards().at(p) != Marker::D) {
            out.reason = "passage " + to_string(g.passage_at(p)) + " is not D";
            break;
          }
        }
      }
      break;
    case Problem::Rendezvous:
      if (report.terminated != Termination::EdgeMeeting && !colocated(world)) {
        out.reason = "agents stopped on different nodes";
      }
      break;
  }
  return out;
}

void require_termination(const World& world, const RunReport& report) {
  auto check = check_termination(world, report);
  if (!check.passed()) throw TerminationViolation("TerminationViolation: " + check.reason);
}

}  // namespace labyrinth
