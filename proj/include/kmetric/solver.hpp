#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kmetric/bitset.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

inline constexpr long kDefaultNodeBudget = 50'000'000;

struct SolveOptions {
  long node_budget = kDefaultNodeBudget;
};

// Set-multicover view of the problem: pick a minimum vertex set holding at
// least k members of every row. Rows are distinctive sets restricted to the
// non-excluded vertices.
struct MulticoverInstance {
  int order = 0;
  int k = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Bitset> rows;
  Bitset forced;    // belongs to every solution
  Bitset excluded;  // barred from every solution
  bool feasible = true;  // every row keeps >= k members after exclusion
  long node_budget = kDefaultNodeBudget;
};

// Builds the table, checks 1 <= k <= dimensional_k (KTooLarge above), masks
// exclusions and seeds `forced` with the union of rows of size exactly k:
// a row with exactly k usable members admits no other way to reach k.
MulticoverInstance build_instance(const Graph& g, int k,
                                  std::optional<Bitset> forced = {},
                                  std::optional<Bitset> excluded = {},
                                  long node_budget = kDefaultNodeBudget);

enum class Proof { Exact, GreedyUpperBoundOnly };

struct BasisResult {
  int k = 0;
  int dim = 0;
  std::vector<int> witness;  // sorted ascending
  long nodes_explored = 0;
  Proof proof = Proof::Exact;
};

// Iterative deepening over the solution size, starting from
// max(k, |forced|, disjoint-row packing bound). Depth-first search branches
// on vertices in descending residual-coverage order and prunes on residual
// deficit against the remaining budget. Deterministic; first optimum under
// that order is returned. Throws Infeasible or ResourceExhausted.
BasisResult solve_exact(const MulticoverInstance& inst);

// Repeatedly adds the vertex covering the most unit deficits (ties: lowest
// index). Upper bound only.
BasisResult solve_greedy(const MulticoverInstance& inst);

// All optimum witnesses in lexicographic order, up to `limit` of them.
std::vector<std::vector<int>> solve_exact_all(const MulticoverInstance& inst,
                                              int limit);

int dim_k(const Graph& g, int k, const SolveOptions& opts = {});

// 1 when some minimum k-generator of join(K1, h) contains the hub, else 0.
// Decided by re-solving with the hub forced and comparing sizes.
int f_of_h_k(const Graph& h, int k, const SolveOptions& opts = {});

}  // namespace kmetric
