#include "kmetric/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kmetric/constructions.hpp"
#include "kmetric/metric_sets.hpp"

namespace kmetric {

MulticoverInstance build_instance(const Graph& g, int k,
                                  std::optional<Bitset> forced,
                                  std::optional<Bitset> excluded,
                                  long node_budget) {
  if (k < 1) fail(ErrorCode::OutOfRange, "k must be positive");
  const int kprime = dimensional_k(g);  // validates order and connectivity
  if (k > kprime)
    fail(ErrorCode::KTooLarge, "k=" + std::to_string(k) +
                                   " exceeds dimensional k " +
                                   std::to_string(kprime));
  const int n = g.order();

  MulticoverInstance inst;
  inst.order = n;
  inst.k = k;
  inst.node_budget = node_budget;
  inst.forced = forced.value_or(Bitset(n));
  inst.excluded = excluded.value_or(Bitset(n));
  if (inst.forced.capacity() != n || inst.excluded.capacity() != n)
    throw std::invalid_argument("forced/excluded bitsets sized for a different graph");
  if (inst.forced.intersects(inst.excluded))
    throw std::invalid_argument("forced and excluded sets overlap");

  PairTable table = build_pair_table(g);
  inst.pairs.reserve(table.rows.size());
  inst.rows.reserve(table.rows.size());
  for (DistinctiveSet& r : table.rows) {
    r.members.and_not(inst.excluded);
    const int cnt = r.members.count();
    if (cnt < k) inst.feasible = false;
    // A row with exactly k usable members leaves no choice: take them all.
    if (cnt == k) inst.forced |= r.members;
    inst.pairs.push_back(r.pair);
    inst.rows.push_back(std::move(r.members));
  }
  return inst;
}

namespace {

struct Search {
  const MulticoverInstance& inst;
  int n;
  int nrows;
  std::vector<std::vector<int>> rows_of_vertex;
  std::vector<int> cover;  // |chosen ∩ row| per row
  Bitset chosen;
  int chosen_count = 0;
  long nodes = 0;
  std::vector<int> solution;

  explicit Search(const MulticoverInstance& i)
      : inst(i),
        n(i.order),
        nrows(int(i.rows.size())),
        rows_of_vertex(size_t(i.order)),
        cover(i.rows.size(), 0),
        chosen(i.order) {
    for (int r = 0; r < nrows; ++r) {
      inst.rows[size_t(r)].for_each(
          [&](int v) { rows_of_vertex[size_t(v)].push_back(r); });
    }
    reset();
  }

  void reset() {
    std::fill(cover.begin(), cover.end(), 0);
    chosen = inst.forced;
    chosen_count = chosen.count();
    inst.forced.for_each([&](int v) {
      for (int r : rows_of_vertex[size_t(v)]) ++cover[size_t(r)];
    });
  }

  void add(int v) {
    chosen.set(v);
    ++chosen_count;
    for (int r : rows_of_vertex[size_t(v)]) ++cover[size_t(r)];
  }
  void remove(int v) {
    chosen.reset(v);
    --chosen_count;
    for (int r : rows_of_vertex[size_t(v)]) --cover[size_t(r)];
  }

  void tick() {
    if (++nodes > inst.node_budget)
      fail(ErrorCode::ResourceExhausted,
           "node budget " + std::to_string(inst.node_budget) + " exhausted");
  }

  int coverage(int v) const {
    int c = 0;
    for (int r : rows_of_vertex[size_t(v)]) c += (cover[size_t(r)] < inst.k);
    return c;
  }

  // True when a completion exists within `budget` more vertices drawn from
  // `cand`; on success `solution` holds it. Restores state before returning.
  bool dfs(const std::vector<int>& cand, int budget) {
    int total_def = 0, max_def = 0;
    for (int r = 0; r < nrows; ++r) {
      const int def = inst.k - cover[size_t(r)];
      if (def > 0) {
        total_def += def;
        max_def = std::max(max_def, def);
      }
    }
    if (total_def == 0) {
      solution = chosen.to_vector();
      return true;
    }
    if (budget <= 0) return false;
    tick();
    if (max_def > budget) return false;

    // Every deficient row must keep enough candidates to close its gap.
    Bitset cand_bits(n);
    for (int v : cand) cand_bits.set(v);
    for (int r = 0; r < nrows; ++r) {
      const int def = inst.k - cover[size_t(r)];
      if (def > 0 && Bitset::and_count(inst.rows[size_t(r)], cand_bits) < def)
        return false;
    }

    std::vector<std::pair<int, int>> scored;  // (-coverage, vertex)
    scored.reserve(cand.size());
    int max_cov = 0;
    for (int v : cand) {
      const int c = coverage(v);
      if (c > 0) scored.emplace_back(-c, v);
      max_cov = std::max(max_cov, c);
    }
    if (long(budget) * max_cov < total_def) return false;
    std::sort(scored.begin(), scored.end());

    std::vector<int> order;
    order.reserve(scored.size());
    for (auto [negc, v] : scored) order.push_back(v);

    for (size_t i = 0; i < order.size(); ++i) {
      add(order[i]);
      std::vector<int> rest(order.begin() + long(i) + 1, order.end());
      if (dfs(rest, budget - 1)) {
        remove(order[i]);
        return true;
      }
      remove(order[i]);
    }
    return false;
  }

  // Enumeration twin of dfs(): fixed ascending order, collects every cover
  // completed at exactly the probe size. Returns true when the limit is hit.
  bool dfs_all(const std::vector<int>& cand, int budget, int limit,
               std::vector<std::vector<int>>& out) {
    int total_def = 0, max_def = 0;
    for (int r = 0; r < nrows; ++r) {
      const int def = inst.k - cover[size_t(r)];
      if (def > 0) {
        total_def += def;
        max_def = std::max(max_def, def);
      }
    }
    if (total_def == 0) {
      out.push_back(chosen.to_vector());
      return int(out.size()) >= limit;
    }
    if (budget <= 0) return false;
    tick();
    if (max_def > budget) return false;

    Bitset cand_bits(n);
    for (int v : cand) cand_bits.set(v);
    int max_cov = 0;
    for (int r = 0; r < nrows; ++r) {
      const int def = inst.k - cover[size_t(r)];
      if (def > 0 && Bitset::and_count(inst.rows[size_t(r)], cand_bits) < def)
        return false;
    }
    std::vector<int> useful;
    useful.reserve(cand.size());
    for (int v : cand) {
      const int c = coverage(v);
      if (c > 0) useful.push_back(v);
      max_cov = std::max(max_cov, c);
    }
    if (long(budget) * max_cov < total_def) return false;

    for (size_t i = 0; i < useful.size(); ++i) {
      add(useful[i]);
      std::vector<int> rest(useful.begin() + long(i) + 1, useful.end());
      const bool done = dfs_all(rest, budget - 1, limit, out);
      remove(useful[i]);
      if (done) return true;
    }
    return false;
  }
};

std::vector<int> free_vertices(const MulticoverInstance& inst) {
  std::vector<int> cand;
  for (int v = 0; v < inst.order; ++v) {
    if (!inst.forced.test(v) && !inst.excluded.test(v)) cand.push_back(v);
  }
  return cand;
}

// Greedy pairwise-disjoint row packing: each picked row demands k private
// vertices, so (#picked) * k is a valid floor.
int packing_lower_bound(const MulticoverInstance& inst) {
  std::vector<int> order(inst.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.rows[size_t(a)].count() < inst.rows[size_t(b)].count();
  });
  Bitset used(inst.order);
  int picked = 0;
  for (int r : order) {
    if (!inst.rows[size_t(r)].intersects(used)) {
      used |= inst.rows[size_t(r)];
      ++picked;
    }
  }
  return picked * inst.k;
}

void require_feasible(const MulticoverInstance& inst) {
  if (!inst.feasible)
    fail(ErrorCode::Infeasible,
         "some pair has fewer than k distinguishing vertices left");
}

}  // namespace

BasisResult solve_greedy(const MulticoverInstance& inst) {
  require_feasible(inst);
  Search s(inst);
  long iters = 0;
  while (true) {
    bool deficient = false;
    for (int r = 0; r < s.nrows && !deficient; ++r)
      deficient = s.cover[size_t(r)] < inst.k;
    if (!deficient) break;

    int best = -1, best_cov = 0;
    for (int v = 0; v < inst.order; ++v) {
      if (s.chosen.test(v) || inst.excluded.test(v)) continue;
      const int c = s.coverage(v);
      if (c > best_cov) {
        best_cov = c;
        best = v;
      }
    }
    if (best < 0)
      fail(ErrorCode::Infeasible, "greedy cannot make progress");
    s.add(best);
    ++iters;
  }
  return BasisResult{inst.k, s.chosen_count, s.chosen.to_vector(), iters,
                     Proof::GreedyUpperBoundOnly};
}

BasisResult solve_exact(const MulticoverInstance& inst) {
  require_feasible(inst);
  const BasisResult greedy = solve_greedy(inst);
  Search s(inst);
  const std::vector<int> cand = free_vertices(inst);
  const int forced_count = inst.forced.count();
  const int lb =
      std::max({inst.k, forced_count, packing_lower_bound(inst)});

  for (int t = lb; t < greedy.dim; ++t) {
    s.reset();
    if (s.dfs(cand, t - forced_count))
      return BasisResult{inst.k, t, s.solution, s.nodes, Proof::Exact};
  }
  // Everything below the greedy size is refuted, so the greedy witness is
  // optimal and the proof is exact.
  return BasisResult{inst.k, greedy.dim, greedy.witness, s.nodes, Proof::Exact};
}

std::vector<std::vector<int>> solve_exact_all(const MulticoverInstance& inst,
                                              int limit) {
  if (limit < 1) throw std::invalid_argument("witness limit must be positive");
  const BasisResult best = solve_exact(inst);
  Search s(inst);
  std::vector<std::vector<int>> out;
  s.dfs_all(free_vertices(inst), best.dim - inst.forced.count(), limit, out);
  return out;
}

int dim_k(const Graph& g, int k, const SolveOptions& opts) {
  return solve_exact(build_instance(g, k, {}, {}, opts.node_budget)).dim;
}

int f_of_h_k(const Graph& h, int k, const SolveOptions& opts) {
  const Graph jg = join(complete(1), h).first;
  const int plain =
      solve_exact(build_instance(jg, k, {}, {}, opts.node_budget)).dim;
  Bitset hub(jg.order());
  hub.set(0);
  const int hub_forced =
      solve_exact(build_instance(jg, k, hub, {}, opts.node_budget)).dim;
  return hub_forced == plain ? 1 : 0;
}

}  // namespace kmetric
