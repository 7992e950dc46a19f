#include "kmetric/metric_sets.hpp"

#include <algorithm>
#include <string>

namespace kmetric {

namespace {

void require_pairable(const Graph& g) {
  if (g.order() < 2)
    fail(ErrorCode::TrivialGraph, "need at least two vertices");
  if (!is_connected(g))
    fail(ErrorCode::DisconnectedGraph, "distances are not defined everywhere");
}

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
}

Bitset row_bits(const DistanceMatrix& d, int n, int x, int y) {
  Bitset b(n);
  const auto rx = d.row(x), ry = d.row(y);
  for (int z = 0; z < n; ++z) {
    if (rx[size_t(z)] != ry[size_t(z)]) b.set(z);
  }
  return b;
}

void finish_table(PairTable& t) {
  t.min_size = t.order;  // |D| <= n always; any row beats this
  for (const DistinctiveSet& r : t.rows)
    t.min_size = std::min(t.min_size, r.members.count());
  for (const DistinctiveSet& r : t.rows) {
    if (r.members.count() == t.min_size) t.argmin_pairs.push_back(r.pair);
  }
}

}  // namespace

size_t PairTable::row_index(int n, int x, int y) {
  assert(x >= 0 && x < y && y < n);
  return size_t(x) * n - size_t(x) * (x + 1) / 2 + size_t(y - x - 1);
}

const DistinctiveSet& PairTable::row(int x, int y) const {
  return rows[row_index(order, x, y)];
}

PairTable build_pair_table_serial(const Graph& g) {
  require_pairable(g);
  const int n = g.order();
  const DistanceMatrix& d = g.dist();

  PairTable t;
  t.order = n;
  t.rows.resize(size_t(n) * (n - 1) / 2);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      DistinctiveSet& r = t.rows[PairTable::row_index(n, x, y)];
      r.pair = {x, y};
      r.members = row_bits(d, n, x, y);
    }
  }
  finish_table(t);
  return t;
}

PairTable build_pair_table(const Graph& g) {
  require_pairable(g);
  const int n = g.order();
  const DistanceMatrix& d = g.dist();

  PairTable t;
  t.order = n;
  t.rows.resize(size_t(n) * (n - 1) / 2);
  // Rows grouped by first vertex; each worker owns whole groups, every slot
  // written exactly once, so the table is identical for any worker count.
#pragma omp parallel for schedule(dynamic, 4)
  for (int x = 0; x < n - 1; ++x) {
    for (int y = x + 1; y < n; ++y) {
      DistinctiveSet& r = t.rows[PairTable::row_index(n, x, y)];
      r.pair = {x, y};
      r.members = row_bits(d, n, x, y);
    }
  }
  finish_table(t);
  return t;
}

DistinctiveSet distinctive_set(const Graph& g, int x, int y) {
  require_pairable(g);
  require_vertex(g, x);
  require_vertex(g, y);
  if (x == y) fail(ErrorCode::SameVertex, "pair needs two distinct vertices");
  if (x > y) std::swap(x, y);
  return DistinctiveSet{{x, y}, row_bits(g.dist(), g.order(), x, y)};
}

Bitset nontrivial_distinctive_set(const Graph& g, int x, int y) {
  DistinctiveSet d = distinctive_set(g, x, y);
  d.members.reset(d.pair.first);
  d.members.reset(d.pair.second);
  return std::move(d.members);
}

int dimensional_k(const Graph& g) {
  require_pairable(g);
  const int n = g.order();
  const DistanceMatrix& d = g.dist();
  int best = n;
  for (int x = 0; x < n; ++x) {
    const auto rx = d.row(x);
    for (int y = x + 1; y < n; ++y) {
      const auto ry = d.row(y);
      int c = 0;
      for (int z = 0; z < n; ++z) c += (rx[size_t(z)] != ry[size_t(z)]);
      best = std::min(best, c);
    }
  }
  return best;
}

int c_of_h(const Graph& h) {
  if (h.order() < 2) fail(ErrorCode::TrivialGraph, "c_of_h needs order >= 2");
  const int n = h.order();
  const std::vector<Bitset> nb = adjacency_bitsets(h);
  int best = n;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Bitset s = nb[size_t(x)] ^ nb[size_t(y)];
      s.set(x);
      s.set(y);
      best = std::min(best, s.count());
    }
  }
  return best;
}

int c_of_family(std::span<const Graph> hs) {
  if (hs.empty()) fail(ErrorCode::TrivialGraph, "empty family");
  int best = c_of_h(hs[0]);
  for (size_t i = 1; i < hs.size(); ++i) best = std::min(best, c_of_h(hs[i]));
  return best;
}

Bitset d_k_union(const Graph& g, int k) {
  require_pairable(g);
  const int n = g.order();
  const DistanceMatrix& d = g.dist();
  Bitset u(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Bitset b = row_bits(d, n, x, y);
      if (b.count() == k) u |= b;
    }
  }
  return u;
}

GeneratorCheck is_k_generator(const Graph& g, const Bitset& s, int k) {
  require_pairable(g);
  if (k < 1) fail(ErrorCode::OutOfRange, "k must be positive");
  const int n = g.order();
  const DistanceMatrix& d = g.dist();
  for (int x = 0; x < n; ++x) {
    const auto rx = d.row(x);
    for (int y = x + 1; y < n; ++y) {
      const auto ry = d.row(y);
      int c = 0;
      for (int z = 0; z < n; ++z) {
        if (s.test(z) && rx[size_t(z)] != ry[size_t(z)]) ++c;
      }
      if (c < k) return GeneratorCheck{false, {x, y}, k - c};
    }
  }
  return GeneratorCheck{true, {-1, -1}, 0};
}

GeneratorCheck is_k_generator(const Graph& g, std::span<const int> s, int k) {
  Bitset b(g.order());
  for (int v : s) {
    require_vertex(g, v);
    b.set(v);
  }
  return is_k_generator(g, b, k);
}

}  // namespace kmetric
