#include "kmetric/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace kmetric {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOrder: return "invalid order";
    case ErrorCode::DisconnectedGraph: return "disconnected graph";
    case ErrorCode::SameVertex: return "same vertex";
    case ErrorCode::TrivialGraph: return "trivial graph";
    case ErrorCode::KTooLarge: return "k too large";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::ResourceExhausted: return "resource exhausted";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::OutOfRange: return "out of range";
  }
  return "unknown";
}

// ----- DistanceMatrix --------------------------------------------------------

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> cells)
    : n_(n), cells_(std::move(cells)) {
  assert(cells_.size() == size_t(n_) * n_);
}

bool DistanceMatrix::all_reachable() const {
  for (std::int32_t c : cells_) {
    if (c == kUnreachable) return false;
  }
  return true;
}

// ----- Graph -----------------------------------------------------------------

Graph::Graph(const Graph& o) : n_(o.n_), m_(o.m_), adj_(o.adj_), labels_(o.labels_) {
  std::scoped_lock lk(o.cache_mu_);
  dist_cache_ = o.dist_cache_;
}

Graph& Graph::operator=(const Graph& o) {
  if (this == &o) return *this;
  Graph tmp(o);
  *this = std::move(tmp);
  return *this;
}

Graph::Graph(Graph&& o) noexcept
    : n_(o.n_), m_(o.m_), adj_(std::move(o.adj_)), labels_(std::move(o.labels_)) {
  std::scoped_lock lk(o.cache_mu_);
  dist_cache_ = std::move(o.dist_cache_);
}

Graph& Graph::operator=(Graph&& o) noexcept {
  if (this == &o) return *this;
  n_ = o.n_;
  m_ = o.m_;
  adj_ = std::move(o.adj_);
  labels_ = std::move(o.labels_);
  std::scoped_lock lk(o.cache_mu_, cache_mu_);
  dist_cache_ = std::move(o.dist_cache_);
  return *this;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges,
                        std::vector<std::string> labels) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(n));
  if (!labels.empty() && int(labels.size()) != n)
    throw std::invalid_argument("label count does not match order");

  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge rejected");
  }
  g.m_ = long(edges.size());
  g.labels_ = std::move(labels);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, int(nb.size()));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const DistanceMatrix& Graph::dist() const {
  std::scoped_lock lk(cache_mu_);
  if (!dist_cache_)
    dist_cache_ = std::make_shared<const DistanceMatrix>(distances(*this));
  return *dist_cache_;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && adj_ == o.adj_;
}

// ----- kernels ---------------------------------------------------------------

namespace {

// Fills the row of `cells` belonging to `src` with BFS hop counts.
void bfs_row(const Graph& g, int src, std::int32_t* row, std::vector<int>& queue) {
  const int n = g.order();
  std::fill(row, row + n, DistanceMatrix::kUnreachable);
  queue.clear();
  queue.push_back(src);
  row[src] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const std::int32_t du = row[u];
    for (int w : g.neighbors(u)) {
      if (row[w] == DistanceMatrix::kUnreachable) {
        row[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceMatrix distances_serial(const Graph& g) {
  const int n = g.order();
  std::vector<std::int32_t> cells(size_t(n) * n);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) bfs_row(g, s, cells.data() + size_t(s) * n, queue);
  return DistanceMatrix(n, std::move(cells));
}

DistanceMatrix distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::int32_t> cells(size_t(n) * n);
#pragma omp parallel
  {
    std::vector<int> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (int s = 0; s < n; ++s)
      bfs_row(g, s, cells.data() + size_t(s) * n, queue);
  }
  return DistanceMatrix(n, std::move(cells));
}

bool is_connected(const Graph& g) {
  if (g.order() < 1) fail(ErrorCode::InvalidOrder, "empty graph");
  const int n = g.order();
  std::vector<std::int32_t> row(n);
  std::vector<int> queue;
  queue.reserve(n);
  bfs_row(g, 0, row.data(), queue);
  return int(queue.size()) == n;
}

int diameter(const Graph& g) {
  const DistanceMatrix& d = g.dist();
  int best = 0;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!d.reachable(u, v))
        fail(ErrorCode::DisconnectedGraph, "diameter of a disconnected graph");
      best = std::max(best, int(d(u, v)));
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; a non-tree edge seen at depth d closes a cycle of
  // length dist[u] + dist[w] + 1. The minimum over all roots is exact.
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n), queue;
  queue.reserve(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    queue.push_back(r);
    dist[r] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<Bitset> adjacency_bitsets(const Graph& g) {
  const int n = g.order();
  std::vector<Bitset> nb(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) nb[v].set(w);
  }
  return nb;
}

std::vector<std::pair<int, int>> twins(const Graph& g) {
  const int n = g.order();
  const std::vector<Bitset> open = adjacency_bitsets(g);
  std::vector<Bitset> closed = open;
  for (int v = 0; v < n; ++v) closed[v].set(v);

  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (open[x] == open[y] || closed[x] == closed[y]) out.emplace_back(x, y);
    }
  }
  return out;
}

// ----- edge-list text format ---------------------------------------------------

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::ParseError, "edge list line " + std::to_string(line) + ": " + what);
}

// Next content line (comments and blanks skipped); false at end of input.
bool next_line(std::istream& in, std::string& out, int& lineno) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    out = raw;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  int lineno = 0;
  std::string line;
  if (!next_line(in, line, lineno))
    fail(ErrorCode::ParseError, "edge list: missing \"n m\" header");

  long n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      parse_fail(lineno, "header must be exactly \"n m\"");
  }
  if (n < 1 || n > kMaxOrder) parse_fail(lineno, "vertex count out of range");
  if (m < 0 || m > n * (n - 1) / 2) parse_fail(lineno, "edge count out of range");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(m));
  std::vector<Bitset> seen(static_cast<size_t>(n), Bitset(int(n)));
  for (long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno))
      fail(ErrorCode::ParseError, "edge list: expected " + std::to_string(m) +
                                      " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      parse_fail(lineno, "edge line must be exactly \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      parse_fail(lineno, "endpoint out of range");
    if (u == v) parse_fail(lineno, "self-loop");
    if (u > v) parse_fail(lineno, "endpoints must satisfy u < v");
    if (seen[size_t(u)].test(int(v))) parse_fail(lineno, "duplicate edge");
    seen[size_t(u)].set(int(v));
    edges.emplace_back(int(u), int(v));
  }
  if (next_line(in, line, lineno)) parse_fail(lineno, "trailing content");
  return Graph::from_edges(int(n), edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return parse_edge_list(in);
}

}  // namespace kmetric
