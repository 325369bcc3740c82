// Independent re-derivations checked against the library.

#include "fixtures.hpp"

#include "labyrinth/algorithms.hpp"
#include "labyrinth/census.hpp"
#include "labyrinth/engine.hpp"
#include "labyrinth/generators.hpp"
#include "labyrinth/optimum.hpp"
#include "labyrinth/random.hpp"
#include "labyrinth/schedule_search.hpp"
#include "labyrinth/tables.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace labyrinth;

namespace {

const TableSet kExplore{&exploration_table(), &exploration_table()};
const TableSet kRendezvous{&ariadne_table(), &theseus_table()};

// Textbook Tremaux: lowest unused port first, bounce straight back off a
// visited node, retreat along the entry edge when stuck.
std::vector<NodeId> tremaux_walk(const Graph& g, NodeId origin) {
  std::vector<bool> used(g.edge_count(), false), seen(g.node_count(), false);
  std::vector<NodeId> walk{origin};
  std::function<void(NodeId)> visit = [&](NodeId u) {
    seen[u] = true;
    for (Port p = 0; p < g.degree(u); ++p) {
      const EdgeId e = g.edge_at(Passage{u, p});
      if (used[e]) continue;
      used[e] = true;
      const NodeId v = g.opposite(Passage{u, p}).node;
      walk.push_back(v);
      if (!seen[v]) visit(v);
      walk.push_back(u);
    }
  };
  visit(origin);
  return walk;
}

// Iterative deepening over every joint move, no memo.
bool cover_within(const Graph& g, std::size_t k, bool back, NodeId origin, NodeId a, NodeId b, std::uint64_t done,
                  std::size_t rounds) {
  const std::uint64_t all = (std::uint64_t{1} << g.edge_count()) - 1;
  if (done == all && (!back || (a == origin && (k == 1 || b == origin)))) return true;
  if (rounds == 0) return false;
  auto options = [&](NodeId at) {
    std::vector<std::pair<NodeId, std::uint64_t>> out{{at, 0}};
    for (Port p = 0; p < g.degree(at); ++p) {
      out.emplace_back(g.opposite(Passage{at, p}).node, std::uint64_t{1} << g.edge_at(Passage{at, p}));
    }
    return out;
  };
  for (auto [na, ea] : options(a)) {
    if (k == 1) {
      if (cover_within(g, k, back, origin, na, b, done | ea, rounds - 1)) return true;
      continue;
    }
    for (auto [nb, eb] : options(b)) {
      if (cover_within(g, k, back, origin, na, nb, done | ea | eb, rounds - 1)) return true;
    }
  }
  return false;
}

std::size_t naive_opt(const Graph& g, std::size_t k, OptVariant v, NodeId origin) {
  for (std::size_t r = 0;; ++r) {
    if (cover_within(g, k, v == OptVariant::ReturnToOrigin, origin, origin, origin, 0, r)) return r;
  }
}

struct Span {
  std::size_t lo = SIZE_MAX, hi = 0;
};

// Every schedule by plain recursion.
void every_schedule(const World& w, const TableSet& tables, Problem problem, std::size_t moves, Span& out) {
  if (problem == Problem::Rendezvous && colocated(w)) {
    out.lo = std::min(out.lo, moves);
    out.hi = std::max(out.hi, moves);
    return;
  }
  bool any = false;
  for (AgentId id = 0; id < 2; ++id) {
    if (w.agent(id).terminated) continue;
    any = true;
    World next = w;
    auto rec = apply_async_move(next, id, *tables[id]);
    every_schedule(next, tables, problem, moves + (rec ? 1 : 0), out);
  }
  if (!any) {
    out.lo = std::min(out.lo, moves);
    out.hi = std::max(out.hi, moves);
  }
}

// All port numberings of `edges` on `n` nodes, up to `limit` of them.
void each_numbering(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges, std::size_t limit,
                    const std::function<void(const Graph&)>& f) {
  std::vector<std::vector<std::size_t>> ends(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ends[edges[e].first].push_back(2 * e);
    ends[edges[e].second].push_back(2 * e + 1);
  }
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t node) {
    if (count >= limit) return;
    if (node == n) {
      std::vector<EdgeSpec> specs(edges.size());
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t p = 0; p < ends[v].size(); ++p) {
          const std::size_t s = ends[v][p];
          auto& spec = specs[s / 2];
          if (s % 2 == 0) {
            spec.u = static_cast<NodeId>(v);
            spec.port_u = static_cast<Port>(p);
          } else {
            spec.v = static_cast<NodeId>(v);
            spec.port_v = static_cast<Port>(p);
          }
        }
      }
      ++count;
      f(Graph::build(n, specs));
      return;
    }
    std::sort(ends[node].begin(), ends[node].end());
    do {
      go(node + 1);
    } while (count < limit && std::next_permutation(ends[node].begin(), ends[node].end()));
  };
  go(0);
}

bool connected(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

}  // namespace

TEST(Oracle, TremauxWalk) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    Rng rng(derive_seed(81, k));
    auto g = fixtures::share(fixtures::random_graph(rng, 2, 10, 15, true));
    const std::size_t n = g->node_count();
    const NodeId origin = static_cast<NodeId>(rng.below(n));
    World w = dfs_world(g, origin);
    RunReport r = run_dfs(w);
    std::vector<NodeId> got{origin};
    for (const auto& t : r.trace) got.push_back(t.move.to);
    EXPECT_EQ(got, tremaux_walk(*g, origin)) << serialize_graph(*g);
  }
}

TEST(Oracle, OptimumSmallGraphs) {
  std::vector<Graph> graphs{fixtures::k2(), fixtures::triangle(), line_graph(3), fixtures::square()};
  for (std::uint64_t k = 0; k < 12; ++k) {
    Rng rng(derive_seed(91, k));
    const std::size_t n = rng.between(2, 4);
    graphs.push_back(random_connected_graph(n, rng.between(n - 1, 4), false, rng.next(), true));
  }
  for (const Graph& g : graphs) {
    for (std::size_t agents : {1u, 2u}) {
      for (OptVariant v : {OptVariant::TraverseAll, OptVariant::ReturnToOrigin}) {
        EXPECT_EQ(brute_force_opt(g, agents, v, 0), naive_opt(g, agents, v, 0)) << serialize_graph(g);
      }
    }
  }
}

TEST(Oracle, AsyncSchedulesByRecursion) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Rng rng(derive_seed(101, k));
    auto g = fixtures::share(fixtures::random_graph(rng, 2, 5, 4, k % 2 == 0));
    const std::size_t n = g->node_count();
    const std::size_t m = g->edge_count();
    const NodeId o = static_cast<NodeId>(rng.below(n));

    World x = exploration_world(g, o);
    Span e;
    every_schedule(x, kExplore, Problem::Exploration, 0, e);
    SearchResult s = enumerate_schedules(x, kExplore, Problem::Exploration, {4 * m + 4});
    EXPECT_EQ(e.lo, 2 * m);
    EXPECT_EQ(e.hi, 2 * m);
    EXPECT_EQ(s.min_moves, e.lo);
    EXPECT_EQ(s.max_moves, e.hi);

    const NodeId t = static_cast<NodeId>((o + 1 + rng.below(n - 1)) % n);
    World r = rendezvous_world(g, o, t);
    Span rv;
    every_schedule(r, kRendezvous, Problem::Rendezvous, 0, rv);
    SearchResult rs = enumerate_schedules(r, kRendezvous, Problem::Rendezvous, {4 * m + 4});
    EXPECT_EQ(rs.min_moves, rv.lo);
    EXPECT_EQ(rs.max_moves, rv.hi);
    EXPECT_LE(rv.hi, std::min(3 * m, 2 * m + n - 1));
  }
}

// Every connected simple graph on at most four nodes, every port numbering,
// every origin: synchronous exploration takes exactly m steps.
TEST(Oracle, SyncExplorationAllNumberings) {
  std::size_t runs = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::pair<NodeId, NodeId>> all;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<NodeId, NodeId>> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1u) edges.push_back(all[i]);
      }
      if (!connected(n, edges)) continue;
      each_numbering(n, edges, 5000, [&](const Graph& g) {
        auto shared = fixtures::share(g);
        for (NodeId o = 0; o < n; ++o) {
          World w = exploration_world(shared, o);
          RunOptions opts;
          opts.mode = Mode::Sync;
          RunReport r = run_exploration(w, opts);
          ++runs;
          ASSERT_EQ(r.steps, g.edge_count()) << serialize_graph(g) << "origin " << o << "\n" << format_trace(r);
          ASSERT_TRUE(colocated(w));
          ASSERT_TRUE(check_marker_census(w, CensusAlphabet::Exploration).passed());
        }
      });
    }
  }
  EXPECT_GT(runs, 10000u);
}

TEST(Oracle, SyncExplorationSmallMultigraphs) {
  const std::vector<std::vector<std::pair<NodeId, NodeId>>> shapes{
      {{0, 1}, {0, 1}},         {{0, 1}, {0, 1}, {0, 1}}, {{0, 0}, {0, 1}},         {{0, 1}, {1, 1}, {0, 1}},
      {{0, 1}, {1, 2}, {1, 2}}, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}, {{0, 0}, {1, 1}, {0, 1}, {1, 2}}};
  for (const auto& edges : shapes) {
    NodeId n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    each_numbering(n, edges, 5000, [&](const Graph& g) {
      auto shared = fixtures::share(g);
      for (NodeId o = 0; o < n; ++o) {
        World w = exploration_world(shared, o);
        RunOptions opts;
        opts.mode = Mode::Sync;
        RunReport r = run_exploration(w, opts);
        ASSERT_EQ(r.steps, g.edge_count()) << serialize_graph(g) << "origin " << o;
      }
    });
  }
}
