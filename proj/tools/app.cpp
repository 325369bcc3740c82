#include "cli.hpp"

#include "labyrinth/census.hpp"
#include "labyrinth/engine.hpp"

#include <CLI11.hpp>

namespace labyrinth::cli {

namespace {

void graph_flags(CLI::App& cmd, GraphSource& s) {
  cmd.add_option("--graph", s.path, "Graph file");
  cmd.add_option("--family", s.family, "Generator family: line, gadget, pendants, random");
  cmd.add_option("--segments", s.segments, "Line length in edges");
  cmd.add_flag("--broken", s.broken, "Sever the second gadget edge");
  cmd.add_option("--w1", s.w1, "Gadget first edge length");
  cmd.add_option("--w2", s.w2, "Gadget second edge length");
  cmd.add_option("--n", s.n, "Random graph nodes");
  cmd.add_option("--m", s.m, "Random graph edges");
  cmd.add_flag("--weighted", s.weighted, "Random edge lengths");
  cmd.add_flag("--multigraph", s.multigraph, "Allow parallel edges and self-loops");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& os, std::ostream& es) {
  CLI::App app{"Two-agent exploration and rendezvous with whiteboards", "labyrinth"};
  app.require_subcommand(1);

  GraphSource gen_source;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  graph_flags(*gen, gen_source);
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--out", gen_out, "Output file (stdout if absent)");

  RunConfig rc;
  NodeId start_a = 0, start_t = 0;
  std::size_t cap = 0;
  int favored = 0;
  auto* run = app.add_subcommand("run", "Run one algorithm and check it");
  graph_flags(*run, rc.source);
  run->add_option("--problem", rc.problem, "explore, rendezvous, dfs or wfm")
      ->check(CLI::IsMember({"explore", "rendezvous", "dfs", "wfm"}));
  run->add_option("--mode", rc.mode, "sync or async")->check(CLI::IsMember({"sync", "async"}));
  run->add_option("--policy", rc.policy, "Async adversary: rr, random, fixed, starve")
      ->check(CLI::IsMember({"rr", "random", "fixed", "starve"}));
  run->add_option("--schedule", rc.schedule_path, "Turn file of A/T characters (implies fixed)");
  run->add_option("--favored", favored, "Agent the starver keeps running")->check(CLI::Range(0, 1));
  run->add_option("--seed", rc.seed, "Seed");
  auto* a_opt = run->add_option("--start-a", start_a, "Start of agent 0");
  auto* t_opt = run->add_option("--start-t", start_t, "Start of agent 1");
  run->add_option("--edge-meeting", rc.edge_meeting, "Sync crossing rule: now or backtrack")
      ->check(CLI::IsMember({"now", "backtrack"}));
  auto* cap_opt = run->add_option("--cap", cap, "Move or step cap");
  run->add_option("--out", rc.out, "Directory for trace.tsv and report.txt");

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Invariant and bound suite over random instances");
  graph_flags(*verify, vc.source);
  verify->add_option("--trials", vc.trials, "Instances");
  verify->add_option("--seed", vc.seed, "Seed");
  verify->add_flag("--exhaustive", vc.exhaustive, "Enumerate every async schedule when m <= 6");
  verify->add_flag("--inject-corruption", vc.inject_corruption, "Self-test: corrupt one marker before each run");
  verify->add_option("--out", vc.out, "Directory for verify.txt");

  BenchConfig bc;
  auto* bench = app.add_subcommand("bench", "Compare algorithms across a graph family");
  bench->add_option("--family", bc.family, "line or random")->check(CLI::IsMember({"line", "random"}));
  bench->add_option("--min-size", bc.min_size, "Smallest size (segments or nodes)");
  bench->add_option("--max-size", bc.max_size, "Largest size");
  bench->add_option("--trials", bc.trials, "Instances per size");
  bench->add_option("--seed", bc.seed, "Seed");
  bench->add_option("--out", bc.out, "Directory for bench.csv and bench.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, os, es);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_source, gen_seed, gen_out, os);
    if (*run) {
      if (*a_opt) rc.start_a = start_a;
      if (*t_opt) rc.start_t = start_t;
      if (*cap_opt) rc.cap = cap;
      rc.favored = static_cast<AgentId>(favored);
      return cmd_run(rc, os);
    }
    if (*verify) return cmd_verify(vc, os);
    return cmd_bench(bc, os);
  } catch (const UsageError& e) {
    es << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    es << "error: " << e.what() << "\n";
    return kIo;
  } catch (const CensusViolation& e) {
    es << "FAIL CensusViolation: " << e.what() << "\n";
    return kViolation;
  } catch (const EngineError& e) {
    es << "FAIL EngineError: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace labyrinth::cli
