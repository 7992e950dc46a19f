#include <doctest.h>

#include <random>

#include "kmetric/constructions.hpp"
#include "kmetric/metric_sets.hpp"
#include "kmetric/random_graphs.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace kmetric;
using testutil::bits;
using testutil::thrown_code;

TEST_CASE("distinctive_set matches the distance oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 10), rng);
    for (int x = 0; x < g.order(); ++x) {
      for (int y = x + 1; y < g.order(); ++y) {
        DistinctiveSet d = distinctive_set(g, x, y);
        CHECK(d.pair == std::pair<int, int>{x, y});
        CHECK(d.members.to_vector() == oracle::distinctive(g, x, y));
      }
    }
  }
}

TEST_CASE("distinctive_set argument checks") {
  Graph g = path(4);
  CHECK(thrown_code([&] { distinctive_set(g, 2, 2); }) == ErrorCode::SameVertex);
  CHECK(thrown_code([&] { distinctive_set(g, 0, 4); }) == ErrorCode::OutOfRange);
  CHECK(thrown_code([&] { distinctive_set(g, -1, 2); }) == ErrorCode::OutOfRange);
  Graph split = Graph::from_edges(4, testutil::Edges{{0, 1}, {2, 3}});
  CHECK(thrown_code([&] { distinctive_set(split, 0, 1); }) ==
        ErrorCode::DisconnectedGraph);
  CHECK(thrown_code([&] { build_pair_table(path(1)); }) == ErrorCode::TrivialGraph);
}

TEST_CASE("distinctive sets of the 4-path") {
  Graph g = path(4);
  CHECK(distinctive_set(g, 0, 2).members == bits(4, {0, 2, 3}));
  CHECK(distinctive_set(g, 1, 3).members == bits(4, {0, 1, 3}));
  CHECK(distinctive_set(g, 1, 2).members == bits(4, {0, 1, 2, 3}));
}

TEST_CASE("nontrivial_distinctive_set is empty exactly for twins") {
  Graph c4 = cycle(4);
  CHECK(nontrivial_distinctive_set(c4, 0, 2).none());
  CHECK(nontrivial_distinctive_set(c4, 0, 1).any());
  Graph k4 = complete(4);
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      CHECK(nontrivial_distinctive_set(k4, x, y).none());
}

TEST_CASE("pair table of the 4-path") {
  PairTable t = build_pair_table(path(4));
  CHECK(t.order == 4);
  CHECK(t.rows.size() == 6);
  CHECK(t.min_size == 3);
  REQUIRE(t.argmin_pairs.size() == 2);
  CHECK(t.argmin_pairs[0] == std::pair<int, int>{0, 2});
  CHECK(t.argmin_pairs[1] == std::pair<int, int>{1, 3});
  CHECK(t.row(0, 2).members == bits(4, {0, 2, 3}));
  CHECK(t.row(1, 3).members == bits(4, {0, 1, 3}));
  CHECK(t.row(0, 1).members.count() == 4);
}

TEST_CASE("pair table rows are lexicographic and complete") {
  Graph g = wheel(6);
  PairTable t = build_pair_table(g);
  size_t idx = 0;
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y, ++idx) {
      CHECK(PairTable::row_index(g.order(), x, y) == idx);
      CHECK(t.rows[idx].pair == std::pair<int, int>{x, y});
    }
  }
  CHECK(idx == t.rows.size());
}

TEST_CASE("parallel and serial pair-table builds agree") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 20), rng);
    PairTable a = build_pair_table(g);
    PairTable b = build_pair_table_serial(g);
    CHECK(a.min_size == b.min_size);
    CHECK(a.argmin_pairs == b.argmin_pairs);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i)
      CHECK(a.rows[i].members == b.rows[i].members);
  }
}

TEST_CASE("dimensional_k on families and random graphs") {
  CHECK(dimensional_k(path(2)) == 2);
  CHECK(dimensional_k(path(4)) == 3);
  CHECK(dimensional_k(cycle(6)) == 4);
  CHECK(dimensional_k(complete(5)) == 2);  // every pair is a twin pair
  CHECK(dimensional_k(wheel(9)) == 4);
  CHECK(dimensional_k(petersen()) == 6);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 9), rng);
    CHECK(dimensional_k(g) == oracle::min_distinctive_size(g));
  }
}

TEST_CASE("c_of_h agrees with the symmetric-difference oracle") {
  CHECK(c_of_h(path(3)) == 2);
  CHECK(c_of_h(path(4)) == 3);
  CHECK(c_of_h(path(7)) == 3);
  CHECK(c_of_h(cycle(4)) == 2);
  CHECK(c_of_h(cycle(5)) == 4);
  CHECK(c_of_h(cycle(9)) == 4);
  CHECK(c_of_h(complete(6)) == 2);
  CHECK(c_of_h(petersen()) == 6);
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 10), rng);
    CHECK(c_of_h(g) == oracle::min_symdiff_size(g));
  }
}

TEST_CASE("c_of_h is complement-invariant and ignores connectivity") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 10), rng);
    Graph gc = complement(g);  // often disconnected; c_of_h must not care
    CHECK(c_of_h(gc) == c_of_h(g));
  }
  CHECK(thrown_code([] { c_of_h(path(1)); }) == ErrorCode::TrivialGraph);
}

TEST_CASE("c_of_family takes the minimum over members") {
  std::vector<Graph> hs;
  hs.push_back(cycle(5));
  hs.push_back(path(4));
  hs.push_back(cycle(7));
  CHECK(c_of_family(hs) == 3);
  CHECK(thrown_code([] { c_of_family({}); }) == ErrorCode::TrivialGraph);
}

TEST_CASE("d_k_union collects rows of size exactly k") {
  Graph g = path(4);
  CHECK(d_k_union(g, 3) == bits(4, {0, 1, 2, 3}));
  CHECK(d_k_union(g, 2).none());
  CHECK(d_k_union(g, 4) == bits(4, {0, 1, 2, 3}));
  CHECK(d_k_union(g, 1).none());  // rows always hold both pair members
}

TEST_CASE("is_k_generator") {
  Graph g = path(3);
  CHECK(bool(is_k_generator(g, std::vector<int>{0}, 1)));
  GeneratorCheck bad = is_k_generator(g, std::vector<int>{1}, 1);
  CHECK_FALSE(bool(bad));
  CHECK(bad.failing_pair == std::pair<int, int>{0, 2});
  CHECK(bad.deficit == 1);

  CHECK(bool(is_k_generator(path(4), bits(4, {0, 1, 3}), 2)));
  GeneratorCheck two = is_k_generator(path(4), bits(4, {0, 1}), 2);
  CHECK_FALSE(bool(two));
  CHECK(two.failing_pair == std::pair<int, int>{0, 2});  // only vertex 0 helps

  // whole vertex set always reaches the dimensional k
  Graph w = wheel(7);
  Bitset all(w.order());
  for (int v = 0; v < w.order(); ++v) all.set(v);
  CHECK(bool(is_k_generator(w, all, dimensional_k(w))));
  CHECK_FALSE(bool(is_k_generator(w, all, dimensional_k(w) + 1)));
}

TEST_CASE("random generator checks agree with the oracle") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 8), rng);
    Bitset s(g.order());
    std::vector<int> sv;
    for (int v = 0; v < g.order(); ++v) {
      if (rng() & 1) {
        s.set(v);
        sv.push_back(v);
      }
    }
    int k = 1 + int(rng() % 3);
    CHECK(bool(is_k_generator(g, s, k)) == oracle::generator_ok(g, sv, k));
  }
}
