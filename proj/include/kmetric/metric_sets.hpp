#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kmetric/bitset.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

// Vertices whose distance to x differs from their distance to y. Always
// contains x and y themselves, so its size is at least 2.
struct DistinctiveSet {
  std::pair<int, int> pair{-1, -1};
  Bitset members;
};

// One row per unordered pair, lexicographic by (x, y). min_size is the
// dimensional k of the graph; argmin_pairs lists every pair attaining it.
struct PairTable {
  int order = 0;
  std::vector<DistinctiveSet> rows;
  int min_size = 0;
  std::vector<std::pair<int, int>> argmin_pairs;

  static size_t row_index(int n, int x, int y);
  const DistinctiveSet& row(int x, int y) const;
};

// Row construction distributes pairs across OpenMP workers; the serial build
// is the reference. Identical tables either way. Requires a connected graph
// of order >= 2.
PairTable build_pair_table(const Graph& g);
PairTable build_pair_table_serial(const Graph& g);

DistinctiveSet distinctive_set(const Graph& g, int x, int y);
// Same set minus x and y; empty exactly when x and y are twins.
Bitset nontrivial_distinctive_set(const Graph& g, int x, int y);

// Largest k for which a k-metric generator exists: the smallest distinctive
// set size over all pairs.
int dimensional_k(const Graph& g);

// min over pairs of |(N(x) xor N(y)) with x and y added|. Defined for any
// graph of order >= 2, connected or not. Invariant under complement.
int c_of_h(const Graph& h);
int c_of_family(std::span<const Graph> hs);

// Union of all distinctive sets of size exactly k (empty when none).
Bitset d_k_union(const Graph& g, int k);

struct GeneratorCheck {
  bool ok = false;
  std::pair<int, int> failing_pair{-1, -1};  // lexicographically first failure
  int deficit = 0;                           // k - |S cap D| for that pair
  explicit operator bool() const { return ok; }
};

GeneratorCheck is_k_generator(const Graph& g, const Bitset& s, int k);
GeneratorCheck is_k_generator(const Graph& g, std::span<const int> s, int k);

}  // namespace kmetric
