#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "chromaspec/chromatic.hpp"
#include "chromaspec/errors.hpp"
#include "chromaspec/graph_ops.hpp"
#include "chromaspec/graph_props.hpp"
#include "chromaspec/spectrum.hpp"
#include "oracles.hpp"

using namespace chromaspec;

namespace {

Graph random_graph(std::mt19937_64& rng, int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng() % 2) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("complete graph, path and cycle") {
  CHECK(chromatic_poly(Graph::complete(3)) == Poly{0, 2, -3, 1});
  CHECK(chromatic_poly(Graph::path(3)) == Poly{0, 1, -2, 1});
  const Poly c4 = oracle::interpolated_chromatic(Graph::cycle(4));
  CHECK(c4 == Poly{0, -3, 6, -4, 1});
  CHECK(chromatic_poly(Graph::cycle(4)) == c4);
}

TEST_CASE("coloring counts") {
  CHECK(count_colorings(Graph::complete(3), 3) == 6);
  CHECK(count_colorings(Graph::complete(3), 2) == 0);
  CHECK(count_colorings(Graph::cycle(5), 3) == 30);
  CHECK(chromatic_poly(Graph::cycle(5)).eval(Integer(3)) == 30);
  CHECK_THROWS_AS(count_colorings(Graph(30), 3), GuardError);
}

TEST_CASE("engine agrees with coloring counts on the census up to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_census(n).graphs) {
      const Poly p = chromatic_poly(g);
      for (unsigned k = 1; k <= 4; ++k) CHECK(p.eval(Integer(k)) == count_colorings(g, k));
    }
  }
}

TEST_CASE("engine agrees with interpolation on random graphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 7) + 1);
    CHECK(chromatic_poly(g) == oracle::interpolated_chromatic(g));
  }
}

TEST_CASE("multigraph reductions") {
  Graph g = Graph::complete(3);
  g.add_edge(0, 1, 2);
  CHECK(chromatic_poly(g) == chromatic_poly(Graph::complete(3)));
  Graph loop(2, {{0, 1}});
  loop.add_edge(1, 1);
  CHECK(chromatic_poly(loop).is_zero());
  CHECK(chromatic_poly(Graph(0)) == Poly{1});
  CHECK(chromatic_poly(Graph(3)) == Poly::monomial(3));
}

TEST_CASE("sign-normalized values") {
  CHECK(z_value(Graph::complete(2), 1) == Scalar(2));
  const Scalar lambda(Rational(5, 3));
  CHECK(z_value(Graph(1), lambda) == lambda);
  CHECK(z_value(Graph::complete(4), 1) == Scalar(24));
}

TEST_CASE("alternating coefficients and positivity") {
  std::mt19937_64 rng(43);
  const std::vector<Scalar> lambdas{Scalar(Rational(1, 3)), Scalar(1), Scalar(Rational(3, 2)), Scalar::parse("-1+1*sqrt(5)")};
  for (int t = 0; t < 80; ++t) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 8) + 1);
    CHECK(has_alternating_signs(chromatic_poly(g), g.order()));
    for (const auto& l : lambdas) CHECK(z_value(g, l).sign() > 0);
  }
}

TEST_CASE("degenerate evaluation points") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 80; ++t) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 7) + 1);
    const Poly p = chromatic_poly(g);
    CHECK(p.eval(Integer(0)) == 0);
    CHECK(p.eval(Integer(1)) == (g.edge_count() == 0 ? 1 : 0));
    const Integer expected = is_bipartite(g) ? Integer(1) << component_count(g) : Integer(0);
    CHECK(p.eval(Integer(2)) == expected);
  }
}

TEST_CASE("identities on small graphs") {
  for (const auto& [a, b] : Graph::complete(3).simple_edges()) CHECK(check_additive_dc(Graph::complete(3), {a, b}, 1));
  for (const auto& [a, b] : Graph::complete(4).simple_edges()) {
    CHECK(check_additive_dc(Graph::complete(4), {a, b}, Scalar(Rational(3, 2))));
    CHECK(check_polyid(Graph::complete(4), {a, b}));
  }
  CHECK(check_join_shift(Graph(1), 2));
  CHECK(check_join_shift(Graph::path(3), 1));
  CHECK(check_leaf_identity(Graph::cycle(5), 2));
}

TEST_CASE("join shift against coloring counts") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 5) + 1);
    const int m = static_cast<int>(rng() % 2) + 1;
    const Graph joined = join_clique(g, m);
    const Poly p = chromatic_poly(g);
    for (int k = 1; k <= 5; ++k) {
      const Integer rhs = falling_factorial(Scalar(k), static_cast<unsigned>(m)).rational_part().get_num() *
                          (k - m >= 0 ? p.eval(Integer(k - m)) : Integer(0));
      CHECK(count_colorings(joined, static_cast<unsigned>(k)) == rhs);
    }
  }
}

TEST_CASE("cache is transparent") {
  ChromaticEngine cached;
  ChromaticEngine uncached(ChromaticOptions{false, kDefaultCanonicalLimit});
  std::mt19937_64 rng(59);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 9) + 1);
    CHECK(cached.chromatic_poly(g) == uncached.chromatic_poly(g));
    CHECK(cached.chromatic_poly(g) == cached.chromatic_poly(g));
  }
  CHECK(uncached.cache().size() == 0);
  CHECK(cached.cache().size() > 0);
}

TEST_CASE("graphs above the canonical limit are not cached") {
  ChromaticEngine engine(ChromaticOptions{true, 5});
  CHECK(engine.chromatic_poly(Graph::cycle(7)) == oracle::interpolated_chromatic(Graph::cycle(7)));
  CHECK_FALSE(engine.cache().find(canonical_form(Graph::cycle(7))).has_value());
  CHECK_FALSE(engine.cache().find(canonical_form(Graph::cycle(6))).has_value());
  CHECK(engine.cache().find(canonical_form(Graph::cycle(5))).has_value());
}

TEST_CASE("persisted cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "chromaspec-cache-test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "chromatic-cache.v1";
  ChromaticEngine engine;
  (void)engine.chromatic_poly(Graph::cycle(6));
  (void)engine.chromatic_poly(Graph::complete(5));
  engine.cache().save(file);

  ChromaticCache loaded;
  loaded.load(file);
  CHECK(loaded.size() == engine.cache().size());
  const auto key = canonical_form(Graph::complete(5));
  REQUIRE(loaded.find(key).has_value());
  CHECK(*loaded.find(key) == chromatic_poly(Graph::complete(5)));

  std::ofstream(file) << "other header\n";
  CHECK_THROWS_AS(loaded.load(file), DomainError);
  std::filesystem::remove_all(dir);
}
