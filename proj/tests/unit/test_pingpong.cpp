#include <doctest.h>

#include "chromaspec/errors.hpp"
#include "chromaspec/pingpong.hpp"

using namespace chromaspec;

namespace {
Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }
}  // namespace

TEST_CASE("negative regime at q = -1") {
  const Certificate c = certify(-1);
  CHECK(c.certified);
  CHECK(c.regime.kind == RegimeKind::Negative);
  CHECK(*c.regime.domain == Interval::open_closed(0, 1));
  CHECK(*c.k_image_i == Interval::open_closed(q(3, 4), 1));
  CHECK(mobius_image(Mobius{1, 1, 0, 2}, *c.regime.domain) == Interval::open_closed(q(1, 2), 1));
  CHECK(mobius_image(Mobius{2, 0, 1, 3}, *c.regime.domain) == Interval::open_closed(0, q(1, 2)));
  CHECK(c.base_ratio == Scalar(1));
}

TEST_CASE("fibonacci regime at q = 3") {
  const Certificate c = certify(3);
  CHECK(c.certified);
  CHECK(c.regime.kind == RegimeKind::Fibonacci);
  CHECK(*c.regime.domain == Interval::open(q(1, 3), 1));
  const Interval dom = *c.regime.domain;
  CHECK(mobius_image(ratio_map(parse_word("B"), c.regime.eval), dom).subset_of(Interval::open(q(1, 2), 1)));
  CHECK(mobius_image(ratio_map(parse_word("D"), c.regime.eval), dom).subset_of(Interval::open(q(1, 3), q(1, 2))));
  CHECK(c.base_ratio == q(1, 2));
}

TEST_CASE("case 3 at q = 3/2") {
  const Certificate c = certify(q(3, 2));
  CHECK(c.certified);
  CHECK(c.regime.kind == RegimeKind::Case3);
  CHECK(c.regime.i_target == Interval::below(0, true));
  CHECK(c.regime.j_target == Interval::open_closed(0, q(1, 2)));
  CHECK(c.base_ratio == Scalar(-2));
}

TEST_CASE("regime table") {
  const Regime neg = regime_for(-2);
  CHECK(neg.kind == RegimeKind::Negative);
  CHECK(*neg.domain == Interval::open_closed(0, q(1, 2)));
  CHECK(regime_for(q(3, 2)).kind == RegimeKind::Case3);
  const Regime c2 = regime_for(q(7, 4));
  CHECK(c2.kind == RegimeKind::Case2);
  CHECK(c2.m == 2);
  const Regime c1 = regime_for(q(1, 3));
  CHECK(c1.kind == RegimeKind::Case1);
  CHECK(c1.m == 1);
  CHECK(regime_for(q(151, 100)).kind == RegimeKind::Case3Modified);
  CHECK(regime_for(Scalar::parse("3/2+1/2*sqrt(5)")).kind == RegimeKind::Fibonacci);
}

TEST_CASE("sweep certifies and degenerate points are refused") {
  for (const char* text : {"-3", "-1", "-1/2", "1/3", "5/4", "3/2", "79/50", "9/5", "5/2", "3", "4", "3/2+1/2*sqrt(5)"}) {
    INFO(text);
    const Certificate c = certify(Scalar::parse(text));
    CHECK(c.certified);
    for (const auto& check : c.checks) CHECK(check.passed);
  }
  for (int bad : {0, 1, 2}) CHECK_THROWS_AS(regime_for(bad), DomainError);
}

TEST_CASE("inclusions hold exactly across each regime") {
  for (const char* text : {"-3", "-1/2", "5/2", "3", "1/3", "5/4", "3/2", "79/50", "9/5"}) {
    INFO(text);
    const Certificate c = certify(Scalar::parse(text));
    REQUIRE(c.certified);
    CHECK(c.k_image_i->subset_of(c.regime.i_target));
    CHECK(c.k_image_j->subset_of(c.regime.i_target));
    CHECK(c.l_image_i->subset_of(c.regime.j_target));
    CHECK(c.l_image_j->subset_of(c.regime.j_target));
    CHECK(c.regime.i_target.disjoint_from(c.regime.j_target));
  }
}

TEST_CASE("a failing regime names its condition") {
  const Certificate c = pingpong_certify(make_regime(RegimeKind::Case3, q(1, 3)));
  CHECK_FALSE(c.certified);
  CHECK(c.failure() == "L-maps-into-J");
  CHECK(pingpong_certify(make_regime(RegimeKind::Case3, q(9, 5))).failure() == "pole-free");
  CHECK_THROWS_AS(make_regime(RegimeKind::Case2, q(1, 3)), DomainError);
  CHECK_THROWS_AS(regime_for(q(1, 3), RegimeOverride{RegimeKind::Case2, std::nullopt}), CertificationError);
  CHECK_THROWS_AS(make_regime(RegimeKind::Fibonacci, q(1, 3)), DomainError);
}

TEST_CASE("overrides") {
  const Regime r = regime_for(q(5, 4), RegimeOverride{RegimeKind::Case3, std::nullopt});
  CHECK(r.kind == RegimeKind::Case3);
  const Regime m3 = regime_for(q(9, 5), RegimeOverride{std::nullopt, 3u});
  CHECK(m3.kind == RegimeKind::Case2);
  CHECK(m3.m == 3);
  CHECK(parse_regime_kind("case3-modified") == RegimeKind::Case3Modified);
  CHECK_THROWS_AS(parse_regime_kind("case9"), DomainError);
}
