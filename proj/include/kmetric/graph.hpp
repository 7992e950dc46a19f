#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmetric/bitset.hpp"
#include "kmetric/errors.hpp"

namespace kmetric {

// Largest supported order; keeps pair tables and solver rows at sane sizes.
inline constexpr int kMaxOrder = 4096;

// ----- DistanceMatrix -------------------------------------------------------
// Hop counts for every vertex pair. Unreachable pairs hold kUnreachable, never
// a large stand-in value; check reachable() before doing arithmetic on a cell.
class DistanceMatrix {
public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int32_t> cells);

  int order() const { return n_; }
  std::int32_t operator()(int u, int v) const { return cells_[size_t(u) * n_ + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }
  std::span<const std::int32_t> row(int u) const {
    return {cells_.data() + size_t(u) * n_, size_t(n_)};
  }
  bool all_reachable() const;
  bool operator==(const DistanceMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<std::int32_t> cells_;
};

// ----- Graph ----------------------------------------------------------------
// Immutable simple undirected graph over vertices 0..n-1. Adjacency lists are
// kept sorted, so the same edge set always produces the same object. Safe to
// share across threads once built; the distance cache is guarded internally.
class Graph {
public:
  Graph() = default;
  Graph(const Graph& o);
  Graph& operator=(const Graph& o);
  Graph(Graph&& o) noexcept;
  Graph& operator=(Graph&& o) noexcept;

  // Rejects n outside [1, kMaxOrder], endpoints out of range, self-loops and
  // duplicate edges. Labels, when given, must have one entry per vertex.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          std::vector<std::string> labels = {});

  int order() const { return n_; }
  long edge_count() const { return m_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // All-pairs distances, computed on first use and cached.
  const DistanceMatrix& dist() const;

  // Adjacency comparison; labels are ignored.
  bool operator==(const Graph& o) const;

private:
  int n_ = 0;
  long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const DistanceMatrix> dist_cache_;
};

// ----- kernels and derived quantities ----------------------------------------
// distances() runs one BFS per source and may split sources across OpenMP
// workers; distances_serial() is the plain reference loop. Both produce the
// same matrix bit for bit.
DistanceMatrix distances(const Graph& g);
DistanceMatrix distances_serial(const Graph& g);

bool is_connected(const Graph& g);
int diameter(const Graph& g);  // throws DisconnectedGraph

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Pairs (x, y), x < y, whose open or closed neighborhoods coincide.
std::vector<std::pair<int, int>> twins(const Graph& g);

// One open-neighborhood bitset per vertex.
std::vector<Bitset> adjacency_bitsets(const Graph& g);

// Edge-list text format: optional '#' comment lines, a "n m" header, then one
// "u v" line per edge with 0 <= u < v < n. Bad input throws ParseError.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

}  // namespace kmetric
