#include <doctest.h>

#include <random>

#include "chromaspec/errors.hpp"
#include "chromaspec/interval.hpp"

using namespace chromaspec;

namespace {
Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }
}  // namespace

TEST_CASE("subdivision ratio map at lambda = 1") {
  const Mobius f{1, 1, 0, 2};
  CHECK(mobius_image(f, Interval::open_closed(0, 1)) == Interval::open_closed(q(1, 2), 1));
}

TEST_CASE("identity map") {
  CHECK(mobius_image(Mobius{}, Interval::open_closed(0, 1)) == Interval::open_closed(0, 1));
}

TEST_CASE("apex ratio map at lambda = 1") {
  const Mobius f{2, 0, 1, 3};
  CHECK(mobius_image(f, Interval::open_closed(0, 1)) == Interval::open_closed(0, q(1, 2)));
}

TEST_CASE("infinite endpoints map to open finite endpoints") {
  // r -> 1/(r+1) on [0, +inf) is decreasing: image (0, 1].
  const Mobius f{0, 1, 1, 1};
  CHECK(mobius_image(f, Interval::above(0, true)) == Interval::open_closed(0, 1));
  // Affine maps keep infinity infinite.
  const Mobius g{2, 1, 0, 1};
  CHECK(mobius_image(g, Interval::below(0, true)) == Interval::below(1, true));
  const Mobius h{-1, 0, 0, 1};
  CHECK(mobius_image(h, Interval::below(0, false)) == Interval::above(0, false));
}

TEST_CASE("pole in the closure is rejected") {
  const Mobius f{1, 0, 1, -1};
  CHECK_THROWS_AS(mobius_image(f, Interval::open(0, 1)), DomainError);
  CHECK_THROWS_AS(mobius_image(f, Interval::above(0, false)), DomainError);
  CHECK_NOTHROW(mobius_image(f, Interval::open(2, 3)));
  CHECK_THROWS_AS(mobius_image(Mobius{1, 1, 1, 1}, Interval::open(0, 1)), DomainError);
}

TEST_CASE("interval relations") {
  const Interval a = Interval::open_closed(0, 1);
  const Interval b = Interval::open_closed(1, 2);
  CHECK(a.disjoint_from(b));
  CHECK_FALSE(Interval::closed(0, 1).disjoint_from(Interval::closed(1, 2)));
  CHECK(Interval::open(q(1, 4), q(1, 2)).subset_of(a));
  CHECK_FALSE(Interval::closed(0, 1).subset_of(a));
  CHECK(a.subset_of(Interval::real_line()));
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(0));
  CHECK(a.closure_contains(0));
  CHECK(a.to_string() == "(0,1]");
  CHECK(Interval::below(0, true).to_string() == "(-inf,0]");
  CHECK_THROWS_AS(Interval::open(1, 1), DomainError);
  CHECK_NOTHROW(Interval::closed(1, 1));
}

TEST_CASE("images are spanned by endpoint images and contain sample images") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-6, 6), den(1, 5);
  int tested = 0;
  while (tested < 300) {
    const Mobius f{q(coef(rng)), q(coef(rng)), q(coef(rng)), q(coef(rng))};
    if (f.det().is_zero()) continue;
    Scalar lo = q(coef(rng), den(rng));
    Scalar hi = q(coef(rng), den(rng));
    if (!(lo < hi)) continue;
    const bool lc = coef(rng) > 0;
    const bool hc = coef(rng) > 0;
    const Interval x(Bound::finite(lo, lc), Bound::finite(hi, hc));
    if (const auto p = f.pole(); p && x.closure_contains(*p)) continue;
    ++tested;
    const Interval image = mobius_image(f, x);
    Scalar a = f(lo);
    Scalar b = f(hi);
    bool ac = lc;
    bool bc = hc;
    if (b < a) {
      std::swap(a, b);
      std::swap(ac, bc);
    }
    CHECK(image == Interval(Bound::finite(a, ac), Bound::finite(b, bc)));
    for (int k = 1; k < 8; ++k) {
      const Scalar r = lo + (hi - lo) * q(k, 8);
      CHECK(image.contains(f(r)));
    }
  }
}

TEST_CASE("equivalence of maps up to scaling") {
  CHECK(Mobius{1, 2, 3, 4}.equivalent(Mobius{2, 4, 6, 8}));
  CHECK_FALSE(Mobius{1, 2, 3, 4}.equivalent(Mobius{1, 2, 3, 5}));
}
