#include <doctest.h>

#include <random>

#include "chromaspec/graph_props.hpp"
#include "chromaspec/spectrum.hpp"
#include "oracles.hpp"

using namespace chromaspec;

TEST_CASE("agrees with the subdivision search on every graph up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_census(n).graphs) CHECK(is_planar(g) == oracle::kuratowski_planar(g));
  }
}

TEST_CASE("agrees with the subdivision search on random six-vertex labelings") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    Graph g(6);
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        if (rng() % 5 < 4) g.add_edge(a, b);
      }
    }
    CHECK(is_planar(g) == oracle::kuratowski_planar(g));
  }
}

TEST_CASE("classic cases") {
  CHECK(is_planar(Graph::complete(4)));
  CHECK_FALSE(is_planar(Graph::complete(5)));
  CHECK_FALSE(is_planar(Graph::complete_bipartite(3, 3)));
  CHECK(is_planar(Graph::complete_bipartite(2, 7)));
  // Petersen graph.
  Graph p(10);
  for (int i = 0; i < 5; ++i) {
    p.add_edge(i, (i + 1) % 5);
    p.add_edge(i, i + 5);
    p.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  CHECK_FALSE(is_planar(p));
  Graph multi = Graph::complete(4);
  multi.add_edge(0, 1, 3);
  CHECK(is_planar(multi));
}
