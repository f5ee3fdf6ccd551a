#include <doctest.h>

#include <cmath>
#include <random>

#include "chromaspec/errors.hpp"
#include "chromaspec/scalar.hpp"

using namespace chromaspec;

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

Scalar random_element(std::mt19937_64& rng, bool quadratic) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  const Rational a(num(rng), den(rng));
  const Rational b = quadratic ? Rational(num(rng), den(rng)) : Rational(0);
  return Scalar::quadratic(a, b, 5);
}

}  // namespace

TEST_CASE("comparison of rationals") {
  CHECK(scalar_cmp(q(1, 2), q(1, 3)) > 0);
  CHECK(scalar_cmp(q(1, 3), q(1, 2)) < 0);
  const Scalar golden = Scalar::parse("3/2+1/2*sqrt(5)");
  CHECK(scalar_cmp(golden, golden) == 0);
}

TEST_CASE("sqrt(5) against 9/4 by squaring") {
  // Floating estimate and the exact squared comparison 5 * 16 vs 81 must agree.
  const bool float_less = std::sqrt(5.0L) < 2.25L;
  const bool exact_less = 5 * 16 < 81;
  REQUIRE(float_less == exact_less);
  CHECK((scalar_cmp(Scalar::sqrt_of(5), q(9, 4)) < 0) == exact_less);
  CHECK(scalar_cmp(q(9, 4), Scalar::sqrt_of(5)) > 0);
}

TEST_CASE("sign of a + b sqrt(d) with mixed signs") {
  CHECK(Scalar::parse("3-1*sqrt(5)").sign() > 0);
  CHECK(Scalar::parse("2-1*sqrt(5)").sign() < 0);
  CHECK(Scalar::parse("-3+1*sqrt(5)").sign() < 0);
  CHECK(Scalar::parse("-2+1*sqrt(5)").sign() > 0);
}

TEST_CASE("canonical form: squares leave the radicand and d = 1 folds in") {
  CHECK(Scalar::sqrt_of(8) == Scalar::quadratic(0, 2, 2));
  CHECK(Scalar::sqrt_of(9) == Scalar(3));
  CHECK(Scalar::quadratic(1, 0, 7).is_rational());
  CHECK(Scalar::sqrt_of(12).radicand() == 3);
  CHECK((Scalar::sqrt_of(5) * Scalar::sqrt_of(5)) == Scalar(5));
}

TEST_CASE("mixed radicands are rejected") {
  CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), DomainError);
  CHECK_THROWS_AS((void)(Scalar::sqrt_of(2) < Scalar::sqrt_of(3)), DomainError);
  CHECK_NOTHROW(Scalar::sqrt_of(2) + q(1, 2));
}

TEST_CASE("field axioms hold exactly on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const bool quad = i % 2 == 1;
    const Scalar a = random_element(rng, quad);
    const Scalar b = random_element(rng, quad);
    const Scalar c = random_element(rng, quad);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("order agrees with floating point on random quadratic elements") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = random_element(rng, true);
    const Scalar b = random_element(rng, true);
    const double da = a.to_double();
    const double db = b.to_double();
    if (std::abs(da - db) < 1e-9) continue;
    CHECK((a < b) == (da < db));
  }
}

TEST_CASE("text format round-trips") {
  for (const char* text : {"0", "7", "-3/4", "3/2+1/2*sqrt(5)", "3/2-1/2*sqrt(5)", "1/2*sqrt(5)", "-1/2*sqrt(5)",
                           "2*sqrt(2)", "-1+1*sqrt(3)"}) {
    const Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.to_string()) == s);
  }
  CHECK(Scalar::parse("3/2+1/2*sqrt(5)").to_string() == "3/2+1/2*sqrt(5)");
  CHECK(Scalar::parse("6/4").to_string() == "3/2");
  CHECK(Scalar::parse("sqrt(5)/2") == Scalar::quadratic(0, Rational(1, 2), 5));
  CHECK(Scalar::parse("-1/2").to_string() == "-1/2");
}

TEST_CASE("malformed text is rejected") {
  for (const char* text : {"", "1/", "abc", "1/0", "sqrt(", "1 + 2", "1/2*sqrt(-5)", "--1"}) {
    CHECK_THROWS_AS(Scalar::parse(text), DomainError);
  }
}

TEST_CASE("ceil and powers") {
  CHECK(Scalar::parse("3/2+1/2*sqrt(5)").ceil() == 3);
  CHECK(q(-3, 2).ceil() == -1);
  CHECK(q(4).ceil() == 4);
  CHECK(q(2, 3).pow(3) == q(8, 27));
  CHECK(Scalar::sqrt_of(2).pow(4) == Scalar(4));
  CHECK_THROWS_AS((void)Scalar(0).inverse(), DomainError);
}
