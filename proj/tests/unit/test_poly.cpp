#include <doctest.h>

#include <random>

#include "chromaspec/poly.hpp"

using namespace chromaspec;

TEST_CASE("evaluation of the triangle polynomial") {
  const Poly k3{0, 2, -3, 1};
  CHECK(poly_eval(k3, Scalar(3)) == Scalar(6));
  CHECK(poly_eval(k3, Scalar(-1)) == Scalar(-6));
}

TEST_CASE("evaluation at a fraction matches direct substitution") {
  const Poly p{0, -1, 1};
  const Rational x(1, 2);
  CHECK(poly_eval(p, Scalar(x)) == Scalar(Rational(x * x - x)));
  CHECK(poly_eval(p, Scalar(Rational(1, 2))) == Scalar(Rational(-1, 4)));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Scalar(5), 3) == Scalar(60));
  const Rational h(3, 2);
  CHECK(falling_factorial(Scalar(h), 2) == Scalar(Rational(h * (h - 1))));
  CHECK(falling_factorial(Scalar(2), 3) == Scalar(0));
  CHECK(falling_factorial(Scalar(7), 0) == Scalar(1));
  CHECK(Poly::falling_factorial(3) == Poly{0, 2, -3, 1});
}

TEST_CASE("shift composes p(x - s)") {
  const Poly p{1, 2, 3};
  const Poly shifted = p.shifted(2);
  for (int x = -3; x <= 3; ++x) CHECK(shifted.eval(Integer(x)) == p.eval(Integer(x - 2)));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-5, 5), deg(0, 5);
  for (int i = 0; i < 200; ++i) {
    auto random_poly = [&] {
      std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : c) x = coef(rng);
      return Poly(c);
    };
    const Poly p = random_poly();
    const Poly r = random_poly();
    const Scalar s = i % 2 ? Scalar(Rational(coef(rng), 3)) : Scalar::parse("1/2+1/3*sqrt(5)");
    CHECK(poly_eval(p * r, s) == poly_eval(p, s) * poly_eval(r, s));
    CHECK(poly_eval(p + r, s) == poly_eval(p, s) + poly_eval(r, s));
  }
}

TEST_CASE("trimming and text") {
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK(Poly{0, 0, 0}.degree() == -1);
  CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
  CHECK(Poly{0, -3, 6, -4, 1}.to_string() == "x^4-4x^3+6x^2-3x");
  CHECK(Poly::linear_root(2) == Poly{-2, 1});
}
