#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sca/connectivity.hpp"
#include "sca/oracle.hpp"
#include "util.hpp"

using namespace sca;
using namespace testutil;

TEST_CASE("brute force solves a tiny connectivity instance") {
  // Path 0-1-2 plus an isolated vertex; one overlay edge must reach vertex 3.
  Graph g = make_graph(4, {{0, 1}, {1, 2}});
  Graph h = make_graph(2, {{0, 1}});
  WeightFn w(1);
  auto sol = brute_force_optimum(g, h, w, 1);
  REQUIRE(sol.has_value());
  CHECK(sol->weight == 1);
  Graph f = superpose(g, h, sol->phi);
  CHECK(is_k_edge_connected(f, 1));
  CHECK((sol->phi.image().back() == 3 || sol->phi.image().front() == 3));
}

TEST_CASE("brute force respects weights when breaking placement choices") {
  Graph g = make_graph(4, {{0, 1}, {1, 2}});
  Graph h = make_graph(2, {{0, 1}});
  WeightFn w(5);
  w.set(0, 3, 1);  // make the anchor at vertex 0 strictly cheapest
  auto sol = brute_force_optimum(g, h, w, 1);
  REQUIRE(sol.has_value());
  CHECK(sol->weight == 1);
  CHECK(sol->phi == Mapping({{0, 0}, {1, 3}}));
}

TEST_CASE("brute force reports infeasibility") {
  // Overlay larger than the host.
  CHECK(!brute_force_optimum(make_path(2), make_path(3), WeightFn(1), 1).has_value());
  // Too few overlay vertices to join three host components.
  Graph g(3, {});
  Graph h = make_graph(2, {{0, 1}});
  CHECK(!brute_force_optimum(g, h, WeightFn(1), 1).has_value());
  CHECK(!brute_force_feasible(g, h, 1));
}

TEST_CASE("brute force two-edge-connectivity on a small path") {
  Graph g = make_path(3);
  Graph h = make_graph(2, {{0, 1}});
  WeightFn w(2);
  w.set(0, 2, 4);
  auto sol = brute_force_optimum(g, h, w, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->weight == 4);
  CHECK(sol->phi == Mapping({{0, 0}, {1, 2}}));
  CHECK(is_k_edge_connected(superpose(g, h, sol->phi), 2));
}

TEST_CASE("optimum mapping is the lexicographically first among ties") {
  // Every injection of one edge into a triangle yields weight 1.
  Graph g = make_cycle(3);
  Graph h = make_graph(2, {{0, 1}});
  auto sol = brute_force_optimum(g, h, WeightFn(1), 1);
  REQUIRE(sol.has_value());
  CHECK(sol->phi == Mapping({{0, 0}, {1, 1}}));
}

TEST_CASE("enumeration cap aborts expensive searches") {
  Graph g = make_complete(9);
  Graph h = make_matching(4);
  OracleOptions opts;
  opts.cap = 1000;
  CHECK_THROWS_AS(brute_force_optimum(g, h, WeightFn(1), 1, opts), OracleCapExceeded);
}

TEST_CASE("empty overlay keeps the host as is") {
  Graph h(0, {});
  CHECK(brute_force_feasible(make_path(3), h, 1));
  CHECK(!brute_force_feasible(make_graph(3, {{0, 1}}), h, 1));
  auto sol = brute_force_optimum(make_cycle(4), h, WeightFn(1), 2);
  REQUIRE(sol.has_value());
  CHECK(sol->weight == 0);
  CHECK(sol->phi.image().empty());
}

TEST_CASE("edge connectivity values on known graphs") {
  CHECK(edge_connectivity(make_graph(4, {{0, 1}})) == 0);
  CHECK(edge_connectivity(make_path(4)) == 1);
  CHECK(edge_connectivity(make_cycle(5)) == 2);
  CHECK(edge_connectivity(make_complete(4)) == 3);
  CHECK(edge_connectivity(make_complete(6)) == 5);
  // Two triangles joined by one edge: the join is a cut edge.
  Graph barbell = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  CHECK(edge_connectivity(barbell) == 1);
}

TEST_CASE("edge connectivity agrees with the boolean predicates") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(6, 0.45, rng);
    int lambda = edge_connectivity(g);
    CHECK((lambda >= 1) == is_k_edge_connected(g, 1));
    CHECK((lambda >= 2) == is_k_edge_connected(g, 2));
  }
}

TEST_CASE("brute force optimum is a lower bound over random valid mappings") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(5, 0.5, rng);
    Graph h = random_graph(3, 0.6, rng);
    WeightFn w(1 + rng() % 3);
    auto sol = brute_force_optimum(g, h, w, 1);
    // Try a handful of random injections; any that works must not beat it.
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int s = 0; s < 20; ++s) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<VertexPair> pairs;
      for (int x = 0; x < h.n(); ++x) pairs.push_back({x, perm[x]});
      Mapping phi(pairs);
      if (!is_k_edge_connected(superpose(g, h, phi), 1)) continue;
      REQUIRE(sol.has_value());
      CHECK(sol->weight <= mapping_weight(h, phi, w));
    }
  }
}
