// Times the OpenMP kernels against their serial reference implementations:
// all-pairs BFS distances and pair-table construction. Run with
// OMP_NUM_THREADS set to taste; results must match bit for bit.
#include <chrono>
#include <cstdio>
#include <random>

#include "kmetric/graph.hpp"
#include "kmetric/metric_sets.hpp"
#include "kmetric/random_graphs.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_of(int runs, F f) {
  double best = 1e18;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = Clock::now();
    f();
    const auto t1 = Clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(0x62656e6368ull);
  const kmetric::Graph big = kmetric::random_connected_graph(1600, rng);
  const kmetric::Graph mid = kmetric::random_connected_graph(360, rng);

  int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
#endif
  std::printf("threads: %d\n", threads);

  const double d_serial =
      best_of(3, [&] { (void)kmetric::distances_serial(big); });
  const double d_par = best_of(3, [&] { (void)kmetric::distances(big); });
  std::printf("distances  n=%d   serial %8.1f ms   parallel %8.1f ms   x%.2f\n",
              big.order(), d_serial, d_par, d_serial / d_par);
  if (!(kmetric::distances(big) == kmetric::distances_serial(big))) {
    std::printf("MISMATCH: distance kernels disagree\n");
    return 1;
  }

  const double t_serial =
      best_of(3, [&] { (void)kmetric::build_pair_table_serial(mid); });
  const double t_par = best_of(3, [&] { (void)kmetric::build_pair_table(mid); });
  std::printf("pair table n=%d    serial %8.1f ms   parallel %8.1f ms   x%.2f\n",
              mid.order(), t_serial, t_par, t_serial / t_par);
  const auto a = kmetric::build_pair_table(mid);
  const auto b = kmetric::build_pair_table_serial(mid);
  bool same = a.order == b.order && a.min_size == b.min_size &&
              a.argmin_pairs == b.argmin_pairs && a.rows.size() == b.rows.size();
  for (size_t i = 0; same && i < a.rows.size(); ++i)
    same = a.rows[i].pair == b.rows[i].pair &&
           a.rows[i].members == b.rows[i].members;
  if (!same) {
    std::printf("MISMATCH: pair-table kernels disagree\n");
    return 1;
  }
  return 0;
}
