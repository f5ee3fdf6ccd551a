#include <doctest.h>

#include <random>

#include "chromaspec/errors.hpp"
#include "chromaspec/graph_ops.hpp"
#include "chromaspec/graph_props.hpp"
#include "chromaspec/semigroup.hpp"

using namespace chromaspec;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

std::vector<Word> all_words(int length) {
  std::vector<Word> out;
  for (unsigned mask = 0; mask < (1U << length); ++mask) {
    Word w;
    for (int i = 0; i < length; ++i) w.push_back((mask >> i) & 1U ? Letter::B : Letter::S);
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("feasible vectors of seeds") {
  const Scalar lambda = q(7, 3);
  CHECK(feasible_vector(seed_witness(Seed::K2), lambda) == Vec2{lambda, lambda * lambda});
  const Witness k3 = seed_witness(Seed::K3);
  CHECK(feasible_vector(k3, 1) ==
        Vec2{z_value(contract_edge(k3.graph, k3.edge), 1), z_value(delete_edge(k3.graph, k3.edge), 1)});
  CHECK(feasible_vector(k3, 1) == Vec2{2, 4});
  Witness padded = seed_witness(Seed::K2);
  padded.graph.add_vertex();
  CHECK(feasible_vector(padded, lambda) == Vec2{lambda * lambda, lambda * lambda * lambda});
}

TEST_CASE("attainable vectors of seeds") {
  const Scalar x = q(5, 4);
  CHECK(attainable_vector(seed_witness(Seed::K3), x) == Vec2{x * (x - 1), x * (x - 1) * (x - 1)});
  CHECK(ratio(attainable_vector(seed_witness(Seed::K4), x)) == 1 / (x - 2));
}

TEST_CASE("operation matrices") {
  CHECK(op_matrix(Letter::S, Evaluation::feasible(1)) == Mat2{1, 1, 0, 2});
  CHECK(op_matrix(Letter::B, Evaluation::attainable(q(3, 2))) == Mat2{q(1, 2), 0, 1, q(-1, 2)});
  const Scalar x = q(7, 5);
  CHECK_FALSE((op_matrix(Letter::S, Evaluation::attainable(x)).det() * op_matrix(Letter::B, Evaluation::attainable(x)).det())
                  .is_zero());
  for (int bad : {0, 1, 2}) CHECK_THROWS_AS(op_matrix(Letter::S, Evaluation::attainable(bad)), DomainError);
  CHECK_THROWS_AS(op_matrix(Letter::B, Evaluation::feasible(-2)), DomainError);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("") == Word{});
  CHECK(word_to_string(parse_word("D")) == "SS");
  CHECK(word_to_string(parse_word("BDB")) == "BSSB");
  CHECK_THROWS_AS(parse_word("SX"), DomainError);
}

TEST_CASE("graph-level words") {
  const Witness k2 = seed_witness(Seed::K2);
  CHECK(apply_word_graph({}, k2) == k2);
  const Witness sb = apply_word_graph(parse_word("SB"), k2);
  CHECK(sb.graph.order() == 4);
  CHECK(is_planar(sb.graph));
}

TEST_CASE("matrix prediction matches recomputation for every length-6 word") {
  for (const Evaluation& eval : {Evaluation::feasible(1), Evaluation::feasible(q(3, 2)), Evaluation::attainable(3),
                                 Evaluation::attainable(q(5, 4))}) {
    for (Seed seed : {Seed::K2, Seed::K3, Seed::K4}) {
      const Witness start = seed_witness(seed);
      const Vec2 v0 = witness_vector(start, eval);
      for (const Word& w : all_words(6)) {
        CHECK(predict_vector(w, v0, eval) == witness_vector(apply_word_graph(w, start), eval));
      }
    }
  }
}

TEST_CASE("attainable vectors are sign-flipped feasible vectors") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 50; ++t) {
    Word w;
    for (unsigned i = 0; i < rng() % 6; ++i) w.push_back(rng() % 2 ? Letter::S : Letter::B);
    const Witness x = apply_word_graph(w, seed_witness(Seed::K3));
    const Scalar point = q(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
    CHECK(attainable_vector(x, point) == sign_matrix(x.graph.order()) * feasible_vector(x, -point));
  }
}

TEST_CASE("block matrices") {
  const Scalar h = q(3, 2);
  CHECK(word_matrix(parse_word("BSSB"), Evaluation::attainable(h)) == Mat2{0, q(1, 8), q(-1, 8), q(5, 16)});
  for (const Scalar& x : {q(5, 4), q(9, 5), q(3), q(-2, 3)}) {
    const Evaluation e = Evaluation::attainable(x);
    CHECK(word_matrix(parse_word("SS"), e) == Mat2{1, x - 2, 0, (x - 1) * (x - 1)});
    CHECK(word_matrix(parse_word("BB"), e) == Mat2{(x - 1) * (x - 1), 0, 2 * x - 3, (x - 2) * (x - 2)});
  }
  // The first letter acts first.
  const Evaluation e = Evaluation::attainable(q(5, 4));
  CHECK(word_matrix(parse_word("SB"), e) == op_matrix(Letter::B, e) * op_matrix(Letter::S, e));
}

TEST_CASE("ratios") {
  const Scalar lambda = q(5, 2);
  CHECK(ratio({lambda, lambda * lambda}) == 1 / lambda);
  const Scalar x = q(7, 2);
  CHECK(ratio({x * (x - 1), x * (x - 1) * (x - 1)}) == 1 / (x - 1));
  CHECK(ratio({0, 5}) == Scalar(0));
  CHECK_THROWS_AS(ratio({1, 0}), DomainError);
}

TEST_CASE("ratio maps") {
  CHECK(ratio_map(parse_word("S"), Evaluation::feasible(1)).equivalent(Mobius{1, 1, 0, 2}));
  const Scalar x = q(5, 4);
  const Mobius b2 = ratio_map(parse_word("BB"), Evaluation::attainable(x));
  const Mat2 b = op_matrix(Letter::B, Evaluation::attainable(x));
  CHECK(b2.equivalent(Mobius::from_matrix(b * b)));
  for (const Scalar& r : {q(1, 3), q(-2), q(7, 2)}) {
    CHECK(b2(r) == ((x - 1) * (x - 1) * r) / ((2 * x - 3) * r + (x - 2) * (x - 2)));
  }
}

TEST_CASE("even subdivision powers telescope") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 5; ++t) {
    Scalar x;
    do {
      x = q(static_cast<long>(rng() % 40) - 20, static_cast<long>(rng() % 6) + 1);
    } while (x.is_zero() || x == Scalar(1) || x == Scalar(2));
    for (unsigned m = 1; m <= 6; ++m) {
      const Mobius f = ratio_map(repeat_word(parse_word("S"), 2 * m), Evaluation::attainable(x));
      for (const Scalar& r : {q(1, 7), q(-3), q(11, 5)}) {
        CHECK(f(r) == 1 / x + (r - 1 / x) / (x - 1).pow(2 * m));
      }
    }
  }
}

TEST_CASE("the re-witnessed apex has a singular matrix") {
  CHECK(check_singular_third_op(1));
  CHECK(check_singular_third_op(q(3, 2)));
  const Mat2 m = third_op_matrix(q(9, 4));
  CHECK(m.a == m.b);
  CHECK(m.c == m.d);
  for (const Word& w : all_words(4)) {
    const Witness x = apply_word_graph(w, seed_witness(Seed::K3));
    CHECK(feasible_vector(apply_third_op(x), 2) == third_op_matrix(2) * feasible_vector(x, 2));
  }
}
