#include "oracles.hpp"

#include <algorithm>
#include <deque>

namespace kmetric::oracle {

std::vector<std::vector<int>> fw_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) d[u][v] = 1;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

std::vector<int> distinctive(const Graph& g, int x, int y) {
  const auto d = fw_distances(g);
  std::vector<int> out;
  for (int z = 0; z < g.order(); ++z)
    if (d[x][z] != d[y][z]) out.push_back(z);
  return out;
}

bool generator_ok(const Graph& g, const std::vector<int>& s, int k) {
  const auto d = fw_distances(g);
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      int hits = 0;
      for (int z : s) hits += d[x][z] != d[y][z];
      if (hits < k) return false;
    }
  return true;
}

int min_distinctive_size(const Graph& g) {
  int best = g.order() + 1;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      best = std::min(best, int(distinctive(g, x, y).size()));
  return best;
}

int min_symdiff_size(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int size = 2;  // x and y always count
      for (int z = 0; z < n; ++z)
        if (z != x && z != y && g.adjacent(x, z) != g.adjacent(y, z)) ++size;
      best = std::min(best, size);
    }
  return best;
}

std::optional<int> girth_by_edge_removal(const Graph& g) {
  // Shortest cycle through edge (u,v) = 1 + dist(u,v) in the graph minus that
  // edge; the girth is the minimum over all edges.
  const int n = g.order();
  int best = kInf;
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      std::vector<int> dist(n, kInf);
      std::deque<int> q{u};
      dist[u] = 0;
      while (!q.empty()) {
        const int a = q.front();
        q.pop_front();
        for (int b : g.neighbors(a)) {
          if ((a == u && b == v) || (a == v && b == u)) continue;
          if (dist[b] > dist[a] + 1) {
            dist[b] = dist[a] + 1;
            q.push_back(b);
          }
        }
      }
      if (dist[v] < kInf) best = std::min(best, dist[v] + 1);
    }
  if (best == kInf) return std::nullopt;
  return best;
}

std::optional<DimResult> dim_by_enumeration(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || n < 2 || k > min_distinctive_size(g)) return std::nullopt;
  for (int size = k; size <= n; ++size) {
    // Classic lexicographic combination walk over index vectors.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (generator_ok(g, pick, k)) return DimResult{size, pick};
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;  // unreachable for valid k
}

}  // namespace kmetric::oracle
