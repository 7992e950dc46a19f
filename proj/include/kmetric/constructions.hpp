#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kmetric/graph.hpp"

namespace kmetric {

// Standard families. Orders below the stated minimum throw InvalidOrder.
Graph path(int n);      // n >= 1
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph star(int n);      // n >= 2, center is vertex 0
Graph petersen();

// Edge complement on the same vertex set; labels carried over.
Graph complement(const Graph& g);

// ----- join -----------------------------------------------------------------
// Disjoint union of a and b plus every edge between them. Vertices of a keep
// their indices; vertex j of b becomes right_offset + j.
struct JoinLayout {
  int left_offset = 0;
  int right_offset = 0;
};
std::pair<Graph, JoinLayout> join(const Graph& a, const Graph& b);

// join(K1, path(n)); hub is vertex 0, rim path vertices are 1..n.
Graph fan(int n);  // n >= 1
// join(K1, cycle(n)); hub is vertex 0, rim cycle vertices are 1..n.
Graph wheel(int n);  // n >= 3

// ----- corona ---------------------------------------------------------------
// One attachment graph per base vertex. Attachments may be disconnected but
// the list length must equal the base order.
struct CoronaSpec {
  Graph base;
  std::vector<Graph> attachments;
};

// Base keeps indices 0..n-1; copy i occupies the contiguous block starting at
// copy_offset[i], in attachment vertex order.
struct CoronaLayout {
  int base_order = 0;
  std::vector<int> copy_offset;

  int base_index(int i) const { return i; }
  int copy_index(int i, int j) const { return copy_offset[i] + j; }
  int copy_order(int i) const;
  // Bitset over the product's vertices selecting copy i.
  Bitset copy_mask(int i, int total_order) const;
};

// Product graph: base edges, each copy's edges, and an edge from base vertex i
// to every vertex of copy i.
std::pair<Graph, CoronaLayout> corona(const CoronaSpec& spec);

}  // namespace kmetric
