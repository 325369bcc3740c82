#include "labyrinth/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace labyrinth {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw GraphError(GraphError::Kind::Syntax, "line " + std::to_string(line) + ": " + what, line);
}

std::uint32_t parse_index(std::string_view word, std::size_t line, const char* what) {
  std::uint32_t out = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    syntax(line, std::string("bad ") + what + " '" + std::string(word) + "'");
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<EdgeSpec> specs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "graph") {
      if (n) syntax(line_no, "duplicate 'graph' header");
      if (!specs.empty()) syntax(line_no, "'graph' header must precede edges");
      if (words.size() != 2) syntax(line_no, "expected 'graph <n>'");
      n = parse_index(words[1], line_no, "node count");
    } else if (words[0] == "edge") {
      if (!n) syntax(line_no, "'edge' before 'graph <n>' header");
      if (words.size() != 6) syntax(line_no, "expected 'edge <u> <port_u> <v> <port_v> <weight>'");
      EdgeSpec s;
      s.u = parse_index(words[1], line_no, "node");
      s.port_u = parse_index(words[2], line_no, "port");
      s.v = parse_index(words[3], line_no, "node");
      s.port_v = parse_index(words[4], line_no, "port");
      auto w = parse_rational(words[5]);
      if (!w) syntax(line_no, "bad weight '" + std::string(words[5]) + "'");
      s.weight = *w;
      if (s.u == s.v && s.port_u == s.port_v) syntax(line_no, "self-loop needs two distinct ports");
      specs.push_back(s);
    } else {
      syntax(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
  }
  if (!n) syntax(line_no, "missing 'graph <n>' header");
  return Graph::build(*n, specs);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.node_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << "edge " << e.ends[0].node << " " << e.ends[0].port << " " << e.ends[1].node << " " << e.ends[1].port << " "
        << to_string(e.weight) << "\n";
  }
  return out.str();
}

}  // namespace labyrinth
