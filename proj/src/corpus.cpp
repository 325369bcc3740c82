#include "labyrinth/corpus.hpp"

#include "labyrinth/generators.hpp"
#include "labyrinth/random.hpp"

#include <algorithm>

namespace labyrinth {

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<CorpusEntry> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(seed, k);
    Rng rng(s);
    const bool multi = k % 4 == 3;
    const std::size_t n = rng.between(2, 10);
    const std::size_t most = multi ? 15 : std::min<std::size_t>(15, n * (n - 1) / 2);
    const std::size_t m = rng.between(n - 1, std::max(n - 1, most));
    const auto origin = static_cast<NodeId>(rng.below(n));
    auto g = std::make_shared<const Graph>(random_connected_graph(n, m, false, rng.next(), multi));
    out.push_back({"rand" + std::to_string(k) + (multi ? "m" : "") + "_n" + std::to_string(n) + "_m" +
                       std::to_string(m),
                   std::move(g), origin});
  }
  out.push_back({"two_pendant_triangle", std::make_shared<const Graph>(two_pendant_triangle()), 0});
  return out;
}

std::vector<CorpusEntry> weighted_corpus(const std::vector<CorpusEntry>& base, std::uint64_t seed) {
  std::vector<Rational> palette;
  for (int k = 1; k <= 16; ++k) palette.emplace_back(k, 4);
  std::vector<CorpusEntry> out;
  for (std::size_t k = 0; k < base.size(); ++k) {
    auto g = std::make_shared<const Graph>(with_random_weights(*base[k].graph, palette, derive_seed(seed ^ 0x57, k)));
    out.push_back({base[k].name + "_w", std::move(g), base[k].origin});
  }
  return out;
}

}  // namespace labyrinth
