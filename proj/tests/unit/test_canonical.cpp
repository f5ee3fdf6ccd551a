#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "chromaspec/canonical.hpp"
#include "chromaspec/errors.hpp"
#include "chromaspec/graph6.hpp"
#include "chromaspec/graph_ops.hpp"
#include "oracles.hpp"

using namespace chromaspec;

TEST_CASE("labelings of the path agree") {
  CHECK(canonical_form(Graph(3, {{0, 1}, {1, 2}})) == canonical_form(Graph(3, {{1, 0}, {0, 2}})));
  CHECK(canonical_form(Graph::complete(3)) != canonical_form(Graph::path(3)));
}

TEST_CASE("all labelings of K4 minus an edge give one form") {
  const Graph g = delete_edge(Graph::complete(4), {0, 1});
  std::vector<int> perm{0, 1, 2, 3};
  const std::string expected = oracle::brute_canonical(g);
  do {
    CHECK(canonical_form(relabel(g, perm)) == expected);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("matches exhaustive minimum on random graphs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const int density = std::uniform_int_distribution<int>(1, 5)(rng);
    Graph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (static_cast<int>(rng() % 6) < density) g.add_edge(a, b);
      }
    }
    CHECK(canonical_form(g) == oracle::brute_canonical(g));
  }
}

TEST_CASE("labeling realizes the form and decodes to itself") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    Graph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 2) g.add_edge(a, b);
      }
    }
    const CanonicalLabeling lab = canonical_labeling(g);
    CHECK(graph6_encode(relabel(g, lab.position)) == lab.form);
    CHECK(canonical_form(graph6_decode(lab.form)) == lab.form);
  }
}

TEST_CASE("symmetric graphs near the limit") {
  CHECK(canonical_form(Graph::complete(12)) == graph6_encode(Graph::complete(12)));
  CHECK(canonical_form(Graph(12)) == graph6_encode(Graph(12)));
  const std::string c = canonical_form(Graph::cycle(12));
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(3));
  CHECK(canonical_form(relabel(Graph::cycle(12), perm)) == c);
  CHECK(canonical_form(Graph::complete_bipartite(6, 6)) == canonical_form(Graph::complete_bipartite(6, 6)));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(canonical_form(Graph(13)), GuardError);
  CHECK_NOTHROW(canonical_form(Graph(13), 13));
  Graph multi(2);
  multi.add_edge(0, 1, 2);
  CHECK_THROWS_AS(canonical_form(multi), DomainError);
}
