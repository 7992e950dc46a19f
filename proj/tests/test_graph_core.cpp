#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "kmetric/constructions.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/random_graphs.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace kmetric;
using testutil::Edges;
using testutil::thrown_code;

namespace {

// Compares the library matrix against Floyd-Warshall cell by cell.
void check_against_fw(const Graph& g) {
  auto fw = oracle::fw_distances(g);
  const DistanceMatrix& d = g.dist();
  REQUIRE(d.order() == g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (fw[size_t(u)][size_t(v)] >= oracle::kInf) {
        CHECK_FALSE(d.reachable(u, v));
      } else {
        CHECK(d(u, v) == fw[size_t(u)][size_t(v)]);
      }
    }
  }
}

}  // namespace

TEST_CASE("from_edges accepts a plain graph and sorts adjacency") {
  Edges e{{2, 0}, {0, 1}};
  Graph g = Graph::from_edges(3, e);
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  REQUIRE(g.degree(0) == 2);
  CHECK(g.neighbors(0)[0] == 1);  // sorted regardless of input order
  CHECK(g.neighbors(0)[1] == 2);
}

TEST_CASE("from_edges rejects malformed input") {
  Edges ok{{0, 1}};
  CHECK_THROWS_AS(Graph::from_edges(0, ok), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(kMaxOrder + 1, {}), std::invalid_argument);
  Edges out{{0, 2}};
  CHECK_THROWS_AS(Graph::from_edges(2, out), std::invalid_argument);
  Edges neg{{-1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, neg), std::invalid_argument);
  Edges loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
  Edges dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, dup), std::invalid_argument);
  Edges e{{0, 1}};
  CHECK_THROWS_AS(Graph::from_edges(2, e, {"a"}), std::invalid_argument);
}

TEST_CASE("equality compares adjacency and ignores labels") {
  Edges e{{0, 1}, {1, 2}};
  Graph a = Graph::from_edges(3, e);
  Graph b = Graph::from_edges(3, e, {"x", "y", "z"});
  CHECK(a == b);
  Edges f{{0, 1}, {0, 2}};
  CHECK_FALSE(a == Graph::from_edges(3, f));
}

TEST_CASE("distances match Floyd-Warshall on standard families") {
  check_against_fw(path(1));
  check_against_fw(path(7));
  check_against_fw(cycle(8));
  check_against_fw(complete(6));
  check_against_fw(star(5));
  check_against_fw(wheel(9));
  check_against_fw(petersen());
}

TEST_CASE("distances match Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 14), rng);
    check_against_fw(g);
  }
}

TEST_CASE("distances handles disconnected graphs") {
  Edges e{{0, 1}, {2, 3}};
  Graph g = Graph::from_edges(4, e);
  const DistanceMatrix& d = g.dist();
  CHECK(d(0, 1) == 1);
  CHECK_FALSE(d.reachable(0, 2));
  CHECK_FALSE(d.all_reachable());
  CHECK(d(0, 2) == DistanceMatrix::kUnreachable);
  check_against_fw(g);
}

TEST_CASE("parallel and serial distance kernels agree") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected_graph(3 + int(rng() % 40), rng);
    CHECK(distances(g) == distances_serial(g));
  }
}

TEST_CASE("distance cache survives copies and moves") {
  Graph g = cycle(9);
  const DistanceMatrix& d1 = g.dist();
  Graph copy = g;
  CHECK(copy.dist() == d1);
  Graph moved = std::move(copy);
  CHECK(moved.dist()(0, 4) == 4);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path(1)));
  CHECK(is_connected(cycle(5)));
  Edges e{{0, 1}};
  CHECK_FALSE(is_connected(Graph::from_edges(3, e)));
}

TEST_CASE("diameter on families") {
  CHECK(diameter(path(5)) == 4);
  CHECK(diameter(complete(4)) == 1);
  CHECK(diameter(path(1)) == 0);
  CHECK(diameter(cycle(6)) == 3);
  CHECK(diameter(petersen()) == 2);
  CHECK(diameter(wheel(9)) == 2);
  Edges e{{0, 1}};
  Graph split = Graph::from_edges(3, e);
  CHECK(thrown_code([&] { diameter(split); }) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("girth on families") {
  CHECK(girth(cycle(5)) == 5);
  CHECK(girth(cycle(11)) == 11);
  CHECK(girth(complete(4)) == 3);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(wheel(6)) == 3);
  CHECK_FALSE(girth(path(6)).has_value());
  CHECK_FALSE(girth(star(7)).has_value());
}

TEST_CASE("girth matches edge-removal oracle on random graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(2 + int(rng() % 12), rng);
    CHECK(girth(g) == oracle::girth_by_edge_removal(g));
  }
}

TEST_CASE("twins") {
  CHECK(twins(complete(5)).size() == 10);  // closed neighborhoods coincide
  CHECK(twins(path(4)).empty());
  auto leaf_pairs = twins(star(4));  // the three leaves are mutual twins
  REQUIRE(leaf_pairs.size() == 3);
  CHECK(leaf_pairs[0] == std::pair<int, int>{1, 2});
  auto c4 = twins(cycle(4));  // antipodal pairs share open neighborhoods
  REQUIRE(c4.size() == 2);
  CHECK(c4[0] == std::pair<int, int>{0, 2});
  CHECK(c4[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("adjacency_bitsets") {
  Graph g = path(3);
  auto bs = adjacency_bitsets(g);
  REQUIRE(bs.size() == 3);
  CHECK(bs[0] == testutil::bits(3, {1}));
  CHECK(bs[1] == testutil::bits(3, {0, 2}));
}

TEST_CASE("max_degree") {
  CHECK(star(6).max_degree() == 5);
  CHECK(cycle(7).max_degree() == 2);
  CHECK(path(1).max_degree() == 0);
}

TEST_CASE("parse_edge_list reads the documented format") {
  std::istringstream in(
      "# a triangle with a tail\n"
      "\n"
      "4 4\n"
      "0 1\n"
      "0 2\n"
      "1 2\n"
      "# comment between edges\n"
      "2 3\n");
  Graph g = parse_edge_list(in);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(2, 3));
  CHECK(girth(g) == 3);
}

TEST_CASE("parse_edge_list error cases carry the line number") {
  auto code_of = [](const std::string& text) {
    std::istringstream in(text);
    return thrown_code([&] { parse_edge_list(in); });
  };
  CHECK(code_of("") == ErrorCode::ParseError);
  CHECK(code_of("2\n0 1\n") == ErrorCode::ParseError);          // header not "n m"
  CHECK(code_of("2 1 9\n0 1\n") == ErrorCode::ParseError);      // trailing header field
  CHECK(code_of("0 0\n") == ErrorCode::ParseError);             // order out of range
  CHECK(code_of("3 9\n") == ErrorCode::ParseError);             // edge count too high
  CHECK(code_of("2 2\n0 1\n") == ErrorCode::ParseError);        // missing edge line
  CHECK(code_of("2 1\n0 1 5\n") == ErrorCode::ParseError);      // edge line not "u v"
  CHECK(code_of("2 1\n0 2\n") == ErrorCode::ParseError);        // endpoint out of range
  CHECK(code_of("2 1\n1 1\n") == ErrorCode::ParseError);        // self-loop
  CHECK(code_of("2 1\n1 0\n") == ErrorCode::ParseError);        // wants u < v
  CHECK(code_of("3 2\n0 1\n0 1\n") == ErrorCode::ParseError);   // duplicate
  CHECK(code_of("2 1\n0 1\nleftover\n") == ErrorCode::ParseError);

  try {
    std::istringstream in("3 2\n0 1\n1 1\n");
    parse_edge_list(in);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("load_edge_list round-trips through a file") {
  std::string path_name = "kmetric_test_edges.txt";
  {
    std::ofstream out(path_name);
    out << "4 3\n0 1\n1 2\n2 3\n";
  }
  Graph g = load_edge_list(path_name);
  CHECK(g == path(4));
  std::remove(path_name.c_str());
  CHECK(thrown_code([&] { load_edge_list(path_name); }) == ErrorCode::ParseError);
}
