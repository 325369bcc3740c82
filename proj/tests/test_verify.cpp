#include "fixtures.hpp"

#include "labyrinth/algorithms.hpp"
#include "labyrinth/census.hpp"
#include "labyrinth/continuous.hpp"
#include "labyrinth/gadgets.hpp"
#include "labyrinth/generators.hpp"
#include "labyrinth/optimum.hpp"
#include "labyrinth/random.hpp"
#include "labyrinth/tables.hpp"

#include <gtest/gtest.h>

using namespace labyrinth;

namespace {

const TableSet kExplore{&exploration_table(), &exploration_table()};
const TableSet kRendezvous{&ariadne_table(), &theseus_table()};

// Traversal count certified by a marker, written out from the table
// semantics rather than taken from the library.
int certified(Marker m) {
  switch (m) {
    case Marker::Empty:
      return 0;
    case Marker::E:
    case Marker::F:
    case Marker::B:
    case Marker::EA:
    case Marker::FA:
    case Marker::BA:
    case Marker::ET:
    case Marker::FT:
    case Marker::BT:
      return 1;
    case Marker::D:
    case Marker::EAT:
    case Marker::FAT:
      return 2;
    case Marker::EATT:
    case Marker::FATT:
    case Marker::Dp:
      return 3;
  }
  return -1;
}

const BoundCheck& named(const std::vector<BoundCheck>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST(Census, FreshWorld) {
  World w = exploration_world(fixtures::share(two_pendant_triangle()), 0);
  MarkerCensus c = check_marker_census(w, CensusAlphabet::Exploration);
  EXPECT_TRUE(c.passed());
  for (const auto& e : c.edges) EXPECT_EQ(e.marker_class, 0);
}

TEST(Census, AllDoneAfterExploration) {
  World w = exploration_world(fixtures::share(two_pendant_triangle()), 0);
  run_exploration(w);
  MarkerCensus c = check_marker_census(w, CensusAlphabet::Exploration);
  EXPECT_TRUE(c.passed());
  for (const auto& e : c.edges) {
    EXPECT_EQ(e.marker_class, 2);
    EXPECT_EQ(e.markers[0], Marker::D);
    EXPECT_EQ(e.markers[1], Marker::D);
  }
}

TEST(Census, CorruptedMarker) {
  World w = exploration_world(fixtures::share(two_pendant_triangle()), 0);
  w.set_marker(Passage{1, 1}, Marker::D);
  MarkerCensus c = check_marker_census(w, CensusAlphabet::Exploration);
  EXPECT_FALSE(c.passed());
  EXPECT_EQ(c.offending, 1u);
  try {
    require_marker_census(w, CensusAlphabet::Exploration);
    FAIL();
  } catch (const CensusViolation& e) {
    EXPECT_EQ(e.edge(), 1u);
  }
}

TEST(Census, ForeignSymbol) {
  World w = exploration_world(fixtures::share(fixtures::k2()), 0);
  w.set_marker(Passage{0, 0}, Marker::EA);
  w.set_marker(Passage{1, 0}, Marker::EA);
  w.count_traversal(0);
  EXPECT_FALSE(check_marker_census(w, CensusAlphabet::Exploration).passed());
  EXPECT_TRUE(check_marker_census(w, CensusAlphabet::Rendezvous).passed());
  EXPECT_FALSE(marker_class(CensusAlphabet::Exploration, Marker::EATT));
  EXPECT_EQ(marker_class(CensusAlphabet::Rendezvous, Marker::Dp), 3);
}

TEST(Census, MatchesIndependentClasses) {
  std::size_t snapshots = 0;
  for (std::uint64_t k = 0; k < 150; ++k) {
    Rng rng(derive_seed(51, k));
    auto g = fixtures::share(fixtures::random_graph(rng, 2, 8, 12, k % 2 == 0));
    const std::size_t n = g->node_count();
    auto look = [&](const World& w) {
      ++snapshots;
      for (const Edge& e : w.graph().edges()) {
        const int a = certified(w.marker(e.ends[0]));
        const int b = certified(w.marker(e.ends[1]));
        EXPECT_EQ(a, b);
        EXPECT_EQ(a, static_cast<int>(w.traversals(e.id)));
      }
    };
    RunOptions o;
    o.policy = AdversaryPolicy::random(rng.next());
    o.observer = look;
    World x = exploration_world(g, static_cast<NodeId>(rng.below(n)));
    run_exploration(x, o);
    look(x);
    const NodeId a = static_cast<NodeId>(rng.below(n));
    const NodeId t = static_cast<NodeId>((a + 1 + rng.below(n - 1)) % n);
    World r = rendezvous_world(g, a, t);
    run_rendezvous(r, o);
    look(r);
  }
  EXPECT_GT(snapshots, 2000u);
}

TEST(Path, InitialWorld) {
  World w = exploration_world(fixtures::share(fixtures::triangle()), 0);
  PathCheck p = check_path_invariant(w);
  EXPECT_TRUE(p.passed());
  EXPECT_TRUE(p.once.empty());
}

TEST(Path, EmptyNeedsColocation) {
  World w = rendezvous_world(fixtures::share(fixtures::triangle()), 0, 1);
  EXPECT_FALSE(check_path_invariant(w).passed());
}

TEST(Path, StrayEdge) {
  World w(fixtures::share(line_graph(3)), {0, 0});
  w.count_traversal(2);
  PathCheck p = check_path_invariant(w);
  EXPECT_FALSE(p.passed());
  EXPECT_THROW(require_path_invariant(w), PathViolation);
}

TEST(Path, TrailAlongEveryRun) {
  for (std::uint64_t k = 0; k < 150; ++k) {
    Rng rng(derive_seed(61, k));
    auto g = fixtures::share(fixtures::random_graph(rng, 2, 8, 12, k % 2 == 1));
    const std::size_t n = g->node_count();
    RunOptions o;
    o.policy = AdversaryPolicy::random(rng.next());
    o.observer = [&](const World& w) {
      PathCheck p = check_path_invariant(w);
      EXPECT_TRUE(p.passed()) << p.reason;
      std::vector<EdgeId> once;
      for (EdgeId e = 0; e < w.graph().edge_count(); ++e) {
        if (w.traversals(e) == 1) once.push_back(e);
      }
      EXPECT_EQ(p.once, once);
    };
    World w = exploration_world(g, static_cast<NodeId>(rng.below(n)));
    run_exploration(w, o);
  }
}

TEST(Termination, Checks) {
  auto g = fixtures::share(two_pendant_triangle());
  World w = exploration_world(g, 0);
  RunReport r = run_exploration(w);
  EXPECT_TRUE(check_termination(w, r).passed());

  World fresh = exploration_world(g, 0);
  EXPECT_FALSE(check_termination(fresh, r).passed());
  EXPECT_THROW(require_termination(fresh, r), TerminationViolation);

  World d = dfs_world(fixtures::share(fixtures::k2()), 0);
  RunReport dr = run_dfs(d);
  EXPECT_TRUE(check_termination(d, dr).passed());
}

TEST(Opt, Examples) {
  EXPECT_EQ(brute_force_opt(fixtures::k2(), 2, OptVariant::TraverseAll, 0), 1u);
  EXPECT_EQ(brute_force_opt(fixtures::k2(), 1, OptVariant::ReturnToOrigin, 0), 2u);
  EXPECT_EQ(brute_force_opt(fixtures::triangle(), 2, OptVariant::TraverseAll, 0), 2u);
  EXPECT_EQ(brute_force_opt(fixtures::triangle(), 1, OptVariant::ReturnToOrigin, 0), 3u);
  const std::size_t one = brute_force_opt(two_pendant_triangle(), 1, OptVariant::TraverseAll, 0);
  EXPECT_GE(one, 5u);
  EXPECT_EQ(one, 7u);
  EXPECT_EQ(brute_force_opt(two_pendant_triangle(), 2, OptVariant::TraverseAll, 0), 3u);
}

TEST(Opt, TooLarge) {
  EXPECT_THROW(brute_force_opt(random_connected_graph(12, 45, false, 1), 2, OptVariant::TraverseAll, 0),
               StateSpaceTooLarge);
  EXPECT_THROW(brute_force_opt(random_connected_graph(9, 20, false, 1), 2, OptVariant::ReturnToOrigin, 0, 1000),
               StateSpaceTooLarge);
}

TEST(Competitive, K2) {
  CompetitiveReport c = competitive_report(fixtures::k2(), 0);
  EXPECT_EQ(c.opt_traverse, 1u);
  EXPECT_EQ(c.steps, 1u);
  EXPECT_EQ(c.ratio_traverse, Rational(1));
  EXPECT_TRUE(all_passed(c.checks)) << format_checks(c.checks);
}

TEST(Competitive, TwoPendantTriangle) {
  CompetitiveReport c = competitive_report(two_pendant_triangle(), 0);
  EXPECT_EQ(c.steps, 5u);
  EXPECT_LE(c.ratio_traverse, Rational(2));
  EXPECT_TRUE(all_passed(c.checks)) << format_checks(c.checks);
}

// Two triangles sharing the origin: both agents can close one triangle each
// in three rounds, so m + D = 8 exceeds 5/2 * 3. The algorithm itself still
// returns within m + D.
TEST(Competitive, BowtieBreaksTheRatioBound) {
  Graph g = fixtures::bowtie();
  EXPECT_EQ(g.diameter(), Rational(2));
  CompetitiveReport c = competitive_report(g, 0);
  EXPECT_EQ(c.opt_return, 3u);
  EXPECT_TRUE(named(c.checks, "return_alg_vs_m_plus_d").passed());
  const BoundCheck& ratio = named(c.checks, "m_plus_d_vs_5/2_opt");
  EXPECT_EQ(ratio.observed, Rational(8));
  EXPECT_EQ(ratio.bound, Rational(15, 2));
  EXPECT_FALSE(ratio.passed());
}

TEST(Gadgets, AllScenariosHold) {
  auto scenarios = gadget_scenarios();
  ASSERT_GE(scenarios.size(), 3u);
  for (const auto& s : scenarios) {
    GadgetOutcome o = run_gadget_scenario(s);
    EXPECT_TRUE(all_passed(o.checks)) << s.name << "\n" << format_checks(o.checks);
  }
}

TEST(Gadgets, LineCostsTwiceItsLength) {
  for (const auto& s : gadget_scenarios()) {
    if (s.name != "line_L4") continue;
    GadgetOutcome o = run_gadget_scenario(s);
    EXPECT_EQ(o.replay.cost, Rational(8));
    return;
  }
  FAIL() << "no line scenario";
}

TEST(Gadgets, EqualCycle) {
  for (const auto& s : gadget_scenarios()) {
    if (s.name != "cycle_1") continue;
    GadgetOutcome o = run_gadget_scenario(s);
    EXPECT_EQ(o.replay.cost, Rational(5));
    EXPECT_LE(o.replay.cost, Rational(6));
    return;
  }
  FAIL() << "no cycle scenario";
}

// Two agents leaving one corner of a triangle at equal speed take different
// edges, then cross inside the third edge while the first two are still
// traversed only once.
TEST(Continuous, EdgeMeetingBeforeExplorationEnds) {
  Subdivision sub = subdivide(fixtures::triangle());
  std::array<SpeedProfile, 2> speeds{SpeedProfile::constant(Rational(1)), SpeedProfile::constant(Rational(1))};
  ContinuousRun run = continuous_to_schedule(sub, kExplore, Problem::Exploration, speeds, {0, 0});
  EXPECT_TRUE(run.edge_encounter);
  EXPECT_TRUE(run.opposite_encounter);
  EXPECT_FALSE(run.explored_at_encounter);
  RunReport replay = replay_on_subdivision(sub, kExplore, Problem::Exploration, {0, 0}, run.schedule);
  EXPECT_EQ(original_node_sequences(sub, replay, {0, 0}), run.nodes);
}

TEST(Continuous, RandomInstancesReplay) {
  for (std::uint64_t k = 0; k < 60; ++k) {
    Rng rng(derive_seed(71, k));
    Subdivision sub = subdivide(fixtures::random_graph(rng, 2, 7, 10, false, true));
    const std::size_t n = sub.original_nodes;
    std::array<SpeedProfile, 2> speeds;
    for (auto& p : speeds) {
      const std::size_t pieces = rng.between(1, 4);
      for (std::size_t i = 0; i < pieces; ++i) {
        p.segments.emplace_back(Rational(static_cast<std::int64_t>(rng.between(1, 4)), 2),
                                Rational(static_cast<std::int64_t>(rng.between(i == 0 ? 1 : 0, 3)), 2));
      }
      p.segments.emplace_back(Rational(1), Rational(1));
    }
    const bool rendezvous = k % 2 == 1;
    const TableSet& tables = rendezvous ? kRendezvous : kExplore;
    const Problem problem = rendezvous ? Problem::Rendezvous : Problem::Exploration;
    const NodeId a = static_cast<NodeId>(rng.below(n));
    const NodeId b = rendezvous ? static_cast<NodeId>((a + 1 + rng.below(n - 1)) % n) : a;
    ContinuousRun run = continuous_to_schedule(sub, tables, problem, speeds, {a, b});
    RunReport replay = replay_on_subdivision(sub, tables, problem, {a, b}, run.schedule);
    EXPECT_EQ(original_node_sequences(sub, replay, {a, b}), run.nodes) << "instance " << k;
    if (rendezvous) EXPECT_EQ(replay.terminated, Termination::Colocated) << "instance " << k;
  }
}
