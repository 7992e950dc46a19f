#include "kmetric/random_graphs.hpp"

namespace kmetric {

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  if (n < 1) fail(ErrorCode::InvalidOrder, "order must be positive");
  if (n == 1) return complete(1);

  // Random spanning tree first (attach each vertex to a random earlier one),
  // then sprinkle the remaining pairs. Connected by construction.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> present(size_t(n), std::vector<char>(size_t(n), 0));
  for (int v = 1; v < n; ++v) {
    const int u = int(rng() % std::uint64_t(v));
    edges.emplace_back(u, v);
    present[size_t(u)][size_t(v)] = 1;
  }
  // p in [0.2, 0.8] in 1/1024 steps; compare against a 10-bit draw.
  const std::uint64_t threshold = 205 + rng() % 410;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present[size_t(u)][size_t(v)]) continue;
      if (rng() % 1024 < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

CoronaSpec random_corona_spec(std::mt19937_64& rng, int base_max,
                              int attach_max) {
  if (base_max < 2 || attach_max < 2)
    fail(ErrorCode::InvalidOrder, "need room for order >= 2");
  const int nb = 2 + int(rng() % std::uint64_t(base_max - 1));
  CoronaSpec spec;
  spec.base = random_connected_graph(nb, rng);
  spec.attachments.reserve(size_t(nb));
  for (int i = 0; i < nb; ++i) {
    const int na = 2 + int(rng() % std::uint64_t(attach_max - 1));
    spec.attachments.push_back(random_connected_graph(na, rng));
  }
  return spec;
}

}  // namespace kmetric
