#pragma once

#include "labyrinth/graph.hpp"
#include "labyrinth/world.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace labyrinth::cli {

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kViolation = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either a graph file or a generator family.
struct GraphSource {
  std::string path;
  std::string family;
  std::size_t segments = 3;
  bool broken = false;
  std::string w1 = "1";
  std::string w2 = "1";
  std::size_t n = 6;
  std::size_t m = 8;
  bool weighted = false;
  bool multigraph = false;
};

struct LoadedGraph {
  Graph graph;
  NodeId a = 0;
  NodeId t = 0;
};

struct RunConfig {
  GraphSource source;
  std::string problem = "explore";
  std::string mode = "async";
  std::string policy = "rr";
  std::string schedule_path;
  std::uint64_t seed = 1;
  std::optional<NodeId> start_a;
  std::optional<NodeId> start_t;
  std::string edge_meeting = "now";
  AgentId favored = 0;
  std::optional<std::size_t> cap;
  std::string out;
};

struct VerifyConfig {
  GraphSource source;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  bool exhaustive = false;
  bool inject_corruption = false;
  std::string out;
};

struct BenchConfig {
  std::string family = "line";
  std::size_t min_size = 2;
  std::size_t max_size = 10;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string out;
};

// Family graphs come with their natural starts; file graphs start at node 0
// and the node farthest from it.
LoadedGraph load_graph(const GraphSource& source, std::uint64_t seed);

// Writes next to `path` and renames over it, so readers never see half a file.
void write_atomically(const std::filesystem::path& path, const std::string& content);

int cmd_gen(const GraphSource& source, std::uint64_t seed, const std::string& out, std::ostream& os);
int cmd_run(const RunConfig& config, std::ostream& os);
int cmd_verify(const VerifyConfig& config, std::ostream& os);
int cmd_bench(const BenchConfig& config, std::ostream& os);

// Parses argv, dispatches, and maps exceptions to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& os, std::ostream& es);

}  // namespace labyrinth::cli
