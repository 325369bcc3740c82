#include "cli.hpp"

#include "labyrinth/algorithms.hpp"
#include "labyrinth/census.hpp"
#include "labyrinth/gadgets.hpp"
#include "labyrinth/generators.hpp"
#include "labyrinth/graph_io.hpp"
#include "labyrinth/optimum.hpp"
#include "labyrinth/random.hpp"
#include "labyrinth/schedule.hpp"
#include "labyrinth/schedule_search.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <system_error>

namespace labyrinth::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buf.str();
}

Rational rational_flag(const std::string& name, const std::string& text) {
  auto r = parse_rational(text);
  if (!r || *r <= Rational(0)) throw UsageError("--" + name + " must be a positive rational, got '" + text + "'");
  return *r;
}

NodeId farthest_from(const Graph& g, NodeId from) {
  const auto d = g.hop_distances(from);
  NodeId best = from;
  for (NodeId v = 0; v < d.size(); ++v) {
    if (d[v] > d[best]) best = v;
  }
  return best;
}

void prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir);
}

std::string graph_summary(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.node_count() << " m=" << g.edge_count() << " L=" << to_string(g.total_length())
     << " D=" << to_string(g.diameter());
  return os.str();
}

void prefix_checks(std::vector<BoundCheck>& into, const std::string& prefix, const std::vector<BoundCheck>& checks) {
  for (BoundCheck c : checks) {
    c.name = prefix + "." + c.name;
    into.push_back(std::move(c));
  }
}

// Per-round invariants of a run, collected rather than thrown.
struct RoundWatch {
  std::optional<CensusAlphabet> census;
  bool path = false;
  std::size_t rounds = 0;
  std::string failure;

  RoundObserver observer() {
    return [this](const World& w) {
      ++rounds;
      if (!failure.empty()) return;
      if (census) {
        auto c = check_marker_census(w, *census);
        if (!c.passed()) {
          failure = "CensusViolation edge " + std::to_string(*c.offending) + " round " + std::to_string(rounds);
          return;
        }
      }
      if (path) {
        auto p = check_path_invariant(w);
        if (!p.passed()) failure = "PathViolation round " + std::to_string(rounds) + ": " + p.reason;
      }
    };
  }

  // Also judges the final world when every agent stopped on its own. A meeting
  // ends the run mid-round (after an edge crossing both agents may have
  // written one edge in the same step), so that world is not judged.
  void finish(const World& w, const RunReport& r) {
    if (r.terminated != Termination::AllStopped) return;
    --rounds;
    observer()(w);
  }
};

bool normal_end(Termination t) { return t != Termination::CapExceeded && t != Termination::ScheduleExhausted; }

}  // namespace

LoadedGraph load_graph(const GraphSource& s, std::uint64_t seed) {
  if (!s.path.empty() && !s.family.empty()) throw UsageError("--graph and --family are mutually exclusive");
  if (!s.path.empty()) {
    const std::string text = read_file(s.path);
    try {
      Graph g = parse_graph(text);
      const NodeId t = farthest_from(g, 0);
      return {std::move(g), 0, t};
    } catch (const GraphError& e) {
      throw IoError(s.path + ": " + e.what());
    }
  }
  try {
    if (s.family == "line") {
      if (s.segments == 0) throw UsageError("--segments must be at least 1");
      return {line_graph(s.segments), 0, static_cast<NodeId>(s.segments)};
    }
    if (s.family == "gadget") {
      Gadget gadget = cycle_gadget(rational_flag("w1", s.w1), rational_flag("w2", s.w2), s.broken);
      return {std::move(gadget.graph), gadget.a, gadget.t};
    }
    if (s.family == "pendants") return {two_pendant_triangle(), 0, 4};
    if (s.family == "random") {
      if (s.n < 2) throw UsageError("--n must be at least 2");
      Graph g = random_connected_graph(s.n, s.m, s.weighted, seed, s.multigraph);
      const NodeId t = farthest_from(g, 0);
      return {std::move(g), 0, t};
    }
  } catch (const GraphError& e) {
    throw UsageError(std::string("infeasible spec: ") + e.what());
  }
  if (s.family.empty()) throw UsageError("need --graph or --family");
  throw UsageError("unknown family '" + s.family + "'");
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("error writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot rename onto " + path.string());
  }
}

int cmd_gen(const GraphSource& source, std::uint64_t seed, const std::string& out, std::ostream& os) {
  const std::string text = serialize_graph(load_graph(source, seed).graph);
  if (out.empty()) {
    os << text;
  } else {
    write_atomically(out, text);
  }
  return kOk;
}

int cmd_run(const RunConfig& c, std::ostream& os) {
  const LoadedGraph loaded = load_graph(c.source, c.seed);
  auto graph = std::make_shared<const Graph>(loaded.graph);
  const std::size_t n = graph->node_count();
  const NodeId a = c.start_a.value_or(loaded.a);
  const NodeId t = c.start_t.value_or(loaded.t);
  if (a >= n) throw UsageError("--start-a out of range");
  if (t >= n) throw UsageError("--start-t out of range");

  RunOptions opts;
  if (c.mode == "sync") {
    opts.mode = Mode::Sync;
  } else if (c.mode != "async") {
    throw UsageError("--mode must be sync or async");
  }
  if (c.edge_meeting == "backtrack") {
    opts.edge_meeting = EdgeMeetingRule::BacktrackPlusOne;
  } else if (c.edge_meeting != "now") {
    throw UsageError("--edge-meeting must be now or backtrack");
  }
  if (c.policy == "rr") {
    opts.policy = AdversaryPolicy::round_robin();
  } else if (c.policy == "random") {
    opts.policy = AdversaryPolicy::random(derive_seed(c.seed, 0));
  } else if (c.policy == "starve") {
    opts.policy = AdversaryPolicy::greedy_starver(c.favored);
  } else if (c.policy == "fixed") {
    if (c.schedule_path.empty()) throw UsageError("--policy fixed needs --schedule");
  } else {
    throw UsageError("--policy must be rr, random, fixed or starve");
  }
  if (!c.schedule_path.empty()) {
    const std::string text = read_file(c.schedule_path);
    try {
      opts.policy = AdversaryPolicy::fixed(parse_schedule(text));
    } catch (const std::invalid_argument& e) {
      throw IoError(c.schedule_path + ": " + e.what());
    }
  }
  if (opts.mode == Mode::Sync && (c.policy != "rr" || !c.schedule_path.empty())) {
    throw UsageError("--policy and --schedule only apply to --mode async");
  }
  opts.cap = c.cap;

  RoundWatch watch;
  World world = [&] {
    if (c.problem == "explore") {
      watch.census = CensusAlphabet::Exploration;
      watch.path = true;
      return exploration_world(graph, a);
    }
    if (c.problem == "dfs") return dfs_world(graph, a);
    if (a == t) throw UsageError("--problem " + c.problem + " needs distinct --start-a and --start-t");
    if (c.problem == "rendezvous") {
      watch.census = CensusAlphabet::Rendezvous;
      return rendezvous_world(graph, a, t);
    }
    if (c.problem == "wfm") return wait_for_mommy_world(graph, 0, a, t);
    throw UsageError("--problem must be explore, rendezvous, dfs or wfm");
  }();
  opts.observer = watch.observer();
  std::vector<NodeId> starts;
  for (const auto& agent : world.agents()) starts.push_back(agent.at);

  RunReport report;
  if (c.problem == "explore") {
    report = run_exploration(world, opts);
  } else if (c.problem == "dfs") {
    report = run_dfs(world, opts);
  } else if (c.problem == "rendezvous") {
    report = run_rendezvous(world, opts);
  } else {
    report = wait_for_mommy(world, 0, opts);
  }
  watch.finish(world, report);

  std::vector<BoundCheck> checks = report.checks;
  std::string termination_failure;
  if (c.problem != "wfm") {
    if (auto tc = check_termination(world, report); !tc.passed()) termination_failure = tc.reason;
  }

  std::ostringstream rep;
  rep << "# labyrinth-run v1\n";
  rep << "graph " << graph_summary(*graph) << "\n";
  rep << "problem " << c.problem << " mode " << to_string(report.mode) << " policy "
      << (opts.mode == Mode::Sync ? std::string("none") : (opts.policy ? opts.policy->describe() : "round-robin"))
      << " edge_meeting " << c.edge_meeting << "\n";
  rep << "starts";
  for (NodeId v : starts) rep << " " << v;
  rep << "\n";
  rep << "moves " << report.moves << " steps " << report.steps << " cost " << to_string(report.cost) << "\n";
  rep << "terminated " << to_string(report.terminated) << "\n";
  rep << "invariants " << (watch.failure.empty() ? "PASS" : "FAIL " + watch.failure) << "\n";
  rep << "termination " << (termination_failure.empty() ? "PASS" : "FAIL " + termination_failure) << "\n";
  rep << format_checks(checks);
  const bool ok =
      normal_end(report.terminated) && watch.failure.empty() && termination_failure.empty() && all_passed(checks);
  rep << "result " << (ok ? "PASS" : "FAIL") << "\n";

  if (!c.out.empty()) {
    prepare_dir(c.out);
    write_atomically(fs::path(c.out) / "trace.tsv", format_trace(report));
    write_atomically(fs::path(c.out) / "report.txt", rep.str());
  }
  os << rep.str();
  return ok ? kOk : kViolation;
}

namespace {

const TableSet kExplore{&exploration_table(), &exploration_table()};
const TableSet kRendezvous{&ariadne_table(), &theseus_table()};

struct Trial {
  std::vector<BoundCheck> checks;
  std::vector<std::string> failures;

  void note(const std::string& what, const RoundWatch& w) {
    if (!w.failure.empty()) failures.push_back(what + " " + w.failure);
  }
  void note(const std::string& what, const TerminationCheck& t) {
    if (!t.passed()) failures.push_back(what + " TerminationViolation " + t.reason);
  }
  void note(const std::string& what, const RunReport& r) {
    if (!normal_end(r.terminated)) failures.push_back(what + " " + to_string(r.terminated));
  }
};

void verify_instance(const std::shared_ptr<const Graph>& g, NodeId origin, NodeId a, NodeId t, std::uint64_t seed,
                     const VerifyConfig& config, Trial& out) {
  const std::size_t n = g->node_count();
  const std::size_t m = g->edge_count();

  for (Mode mode : {Mode::Async, Mode::Sync}) {
    const std::string tag = mode == Mode::Async ? "explore_async" : "explore_sync";
    World w = exploration_world(g, origin);
    if (config.inject_corruption) w.set_marker(g->passage_at(0), Marker::D);
    RoundWatch watch{CensusAlphabet::Exploration, true};
    RunOptions opts;
    opts.mode = mode;
    opts.policy = AdversaryPolicy::random(derive_seed(seed, 1));
    opts.observer = watch.observer();
    RunReport r = run_exploration(w, opts);
    watch.finish(w, r);
    out.note(tag, watch);
    out.note(tag, r);
    out.note(tag, check_termination(w, r));
    prefix_checks(out.checks, tag, r.checks);
  }

  if (n >= 2) {
    for (int variant = 0; variant < 3; ++variant) {
      const std::string tag = variant == 0 ? "rendezvous_async" : variant == 1 ? "rendezvous_sync" : "rendezvous_backtrack";
      World w = rendezvous_world(g, a, t);
      RoundWatch watch{CensusAlphabet::Rendezvous, false};
      RunOptions opts;
      opts.mode = variant == 0 ? Mode::Async : Mode::Sync;
      opts.policy = AdversaryPolicy::random(derive_seed(seed, 2));
      if (variant == 2) opts.edge_meeting = EdgeMeetingRule::BacktrackPlusOne;
      opts.observer = watch.observer();
      RunReport r = run_rendezvous(w, opts);
      watch.finish(w, r);
      out.note(tag, watch);
      out.note(tag, r);
      out.note(tag, check_termination(w, r));
      prefix_checks(out.checks, tag, r.checks);
    }
  }

  {
    World w = dfs_world(g, origin);
    RunReport r = run_dfs(w);
    out.note("dfs", r);
    out.note("dfs", check_termination(w, r));
    prefix_checks(out.checks, "dfs", r.checks);
  }

  // Oracle sandwich: m/2 <= OPT <= steps <= 2 OPT, plus the return variant.
  if (g->unit_weights() && m <= 7) {
    CompetitiveReport cr = competitive_report(*g, origin);
    prefix_checks(out.checks, "opt", cr.checks);
  }

  if (config.exhaustive && m <= 6) {
    SearchOptions so;
    so.depth_cap = 4 * m + 4;
    so.state_check = [](const World& w) {
      return check_marker_census(w, CensusAlphabet::Exploration).passed() && check_path_invariant(w).passed();
    };
    SearchResult ex = enumerate_schedules(exploration_world(g, origin), kExplore, Problem::Exploration, so);
    out.checks.push_back(exactly("exhaustive.explore_min_moves", Rational(static_cast<std::int64_t>(ex.min_moves)),
                                 Rational(static_cast<std::int64_t>(2 * m))));
    out.checks.push_back(exactly("exhaustive.explore_max_moves", Rational(static_cast<std::int64_t>(ex.max_moves)),
                                 Rational(static_cast<std::int64_t>(2 * m))));
    if (!ex.checks_passed) {
      out.failures.push_back("exhaustive.explore invariant broken by schedule " + format_schedule(ex.failure_witness));
    }
    if (n >= 2) {
      so.state_check = [](const World& w) { return check_marker_census(w, CensusAlphabet::Rendezvous).passed(); };
      so.terminal_check = [](const World&, Termination why) { return why == Termination::Colocated; };
      SearchResult rv = enumerate_schedules(rendezvous_world(g, a, t), kRendezvous, Problem::Rendezvous, so);
      out.checks.push_back(at_most("exhaustive.rendezvous_max_moves",
                                   Rational(static_cast<std::int64_t>(rv.max_moves)),
                                   Rational(static_cast<std::int64_t>(std::min(3 * m, 2 * m + n - 1)))));
      if (!rv.checks_passed) {
        out.failures.push_back("exhaustive.rendezvous census or meeting broken by schedule " +
                               format_schedule(rv.failure_witness));
      }
    }
  }
}

}  // namespace

int cmd_verify(const VerifyConfig& config, std::ostream& os) {
  if (config.trials == 0) throw UsageError("--trials must be at least 1");
  std::optional<LoadedGraph> fixed;
  if (!config.source.path.empty() || !config.source.family.empty()) fixed = load_graph(config.source, config.seed);

  std::ostringstream rep;
  rep << "# labyrinth-verify v1 seed " << config.seed << " trials " << config.trials
      << (config.exhaustive ? " exhaustive" : "") << "\n";
  std::size_t failed = 0;
  std::size_t check_count = 0;
  for (std::size_t k = 0; k < config.trials; ++k) {
    const std::uint64_t seed = derive_seed(config.seed, k);
    Rng rng(seed);
    std::shared_ptr<const Graph> g;
    if (fixed) {
      g = std::make_shared<const Graph>(fixed->graph);
    } else {
      const std::size_t n = rng.between(2, 10);
      const bool multi = k % 4 == 3;
      const std::size_t most = multi ? 15 : std::min<std::size_t>(15, n * (n - 1) / 2);
      const std::size_t m = rng.between(n - 1, std::max(n - 1, most));
      g = std::make_shared<const Graph>(random_connected_graph(n, m, false, rng.next(), multi));
    }
    const std::size_t n = g->node_count();
    const NodeId origin = static_cast<NodeId>(rng.below(n));
    NodeId a = 0, t = 0;
    if (n >= 2) {
      a = static_cast<NodeId>(rng.below(n));
      t = static_cast<NodeId>((a + 1 + rng.below(n - 1)) % n);
    }

    Trial trial;
    try {
      verify_instance(g, origin, a, t, seed, config, trial);
    } catch (const DepthCapExceeded& e) {
      trial.failures.push_back(std::string("DepthCapExceeded ") + e.what());
    } catch (const StateSpaceTooLarge& e) {
      trial.failures.push_back(std::string("StateSpaceTooLarge ") + e.what());
    } catch (const EngineError& e) {
      trial.failures.push_back(std::string("EngineError ") + e.what());
    }
    for (const auto& c : trial.checks) {
      if (!c.passed()) trial.failures.push_back(format_check(c));
    }
    check_count += trial.checks.size();

    rep << "trial " << k << " " << graph_summary(*g) << " origin " << origin << " starts " << a << " " << t << " checks "
        << trial.checks.size();
    if (trial.failures.empty()) {
      rep << " PASS\n";
    } else {
      ++failed;
      rep << " FAIL " << trial.failures.front() << "\n";
      for (std::size_t i = 1; i < trial.failures.size(); ++i) rep << "  " << trial.failures[i] << "\n";
    }
  }
  rep << "summary trials " << config.trials << " checks " << check_count << " failed " << failed << " "
      << (failed == 0 ? "PASS" : "FAIL") << "\n";

  if (!config.out.empty()) {
    prepare_dir(config.out);
    write_atomically(fs::path(config.out) / "verify.txt", rep.str());
  }
  os << rep.str();
  return failed == 0 ? kOk : kViolation;
}

int cmd_bench(const BenchConfig& config, std::ostream& os) {
  if (config.family != "line" && config.family != "random") throw UsageError("--family must be line or random");
  if (config.min_size < 1 || config.min_size > config.max_size) throw UsageError("need 1 <= --min-size <= --max-size");
  if (config.family == "random" && config.min_size < 2) throw UsageError("random graphs need --min-size >= 2");
  if (config.trials == 0) throw UsageError("--trials must be at least 1");

  struct Row {
    std::size_t size, n, m, dfs, explore, wfm, rendezvous;
    Rational length;
  };
  std::vector<Row> rows;
  std::uint64_t stream = 0;
  for (std::size_t size = config.min_size; size <= config.max_size; ++size) {
    for (std::size_t trial = 0; trial < config.trials; ++trial, ++stream) {
      Graph base = config.family == "line"
                       ? line_graph(size)
                       : random_connected_graph(size, std::min(2 * size, size * (size - 1) / 2), false,
                                                derive_seed(config.seed, stream));
      auto g = std::make_shared<const Graph>(std::move(base));
      const NodeId far = farthest_from(*g, 0);

      World d = dfs_world(g, 0);
      const RunReport dfs = run_dfs(d);
      World x = exploration_world(g, 0);
      RunOptions sync;
      sync.mode = Mode::Sync;
      const RunReport ex = run_exploration(x, sync);
      World wf = wait_for_mommy_world(g, 0, 0, far);
      const RunReport wfm = wait_for_mommy(wf, 0, sync);
      World rv = rendezvous_world(g, 0, far);
      const RunReport rz = run_rendezvous(rv, sync);
      rows.push_back({size, g->node_count(), g->edge_count(), dfs.moves, ex.steps, wfm.moves, rz.steps,
                      g->total_length()});
    }
  }

  std::ostringstream csv;
  csv << "# labyrinth-bench v1 family " << config.family << " seed " << config.seed << "\n";
  csv << "size,n,m,L,dfs_moves,explore_sync_steps,wfm_moves,rendezvous_sync_steps\n";
  for (const Row& r : rows) {
    csv << r.size << "," << r.n << "," << r.m << "," << to_string(r.length) << "," << r.dfs << "," << r.explore << ","
        << r.wfm << "," << r.rendezvous << "\n";
  }

  std::size_t explore_is_m = 0, dfs_is_2m = 0, wfm_within = 0, rendezvous_within = 0, wfm_not_faster = 0;
  Rational ratio_sum(0);
  for (const Row& r : rows) {
    explore_is_m += r.explore == r.m;
    dfs_is_2m += r.dfs == 2 * r.m;
    wfm_within += r.wfm <= 2 * r.m;
    rendezvous_within += r.rendezvous <= (3 * r.m + 1) / 2;
    wfm_not_faster += r.wfm >= r.rendezvous;
    ratio_sum += Rational(static_cast<std::int64_t>(r.explore), static_cast<std::int64_t>(r.dfs));
  }
  const std::size_t total = rows.size();
  std::ostringstream text;
  text << std::left << std::setw(6) << "size" << std::setw(5) << "n" << std::setw(5) << "m" << std::setw(7) << "L"
       << std::setw(6) << "dfs" << std::setw(9) << "explore" << std::setw(6) << "wfm" << "rendezvous\n";
  for (const Row& r : rows) {
    text << std::setw(6) << r.size << std::setw(5) << r.n << std::setw(5) << r.m << std::setw(7) << to_string(r.length)
         << std::setw(6) << r.dfs << std::setw(9) << r.explore << std::setw(6) << r.wfm << r.rendezvous << "\n";
  }
  text << "instances " << total << "\n";
  text << "dfs_moves == 2m: " << dfs_is_2m << "/" << total << "\n";
  text << "explore_sync_steps == m: " << explore_is_m << "/" << total << "\n";
  text << "mean explore_sync_steps / dfs_moves: " << to_string(ratio_sum / Rational(static_cast<std::int64_t>(total)))
       << "\n";
  text << "wfm_moves <= 2m: " << wfm_within << "/" << total << "\n";
  text << "rendezvous_sync_steps <= ceil(3m/2): " << rendezvous_within << "/" << total << "\n";
  text << "wfm_moves >= rendezvous_sync_steps: " << wfm_not_faster << "/" << total << "\n";

  if (!config.out.empty()) {
    prepare_dir(config.out);
    write_atomically(fs::path(config.out) / "bench.csv", csv.str());
    write_atomically(fs::path(config.out) / "bench.txt", text.str());
  }
  os << text.str();
  return kOk;
}

}  // namespace labyrinth::cli
