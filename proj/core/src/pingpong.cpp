#include "chromaspec/pingpong.hpp"

#include <array>

#include "chromaspec/errors.hpp"

namespace chromaspec {
namespace {

const Scalar kCase1Upper = Scalar(Rational(1458, 1000));
const Scalar kCase2Lower = Scalar(Rational(153, 100));
const Scalar kHalf = Scalar(Rational(1, 2));
const Scalar kThreeHalves = Scalar(Rational(3, 2));

bool is_degenerate(const Scalar& q) { return q.is_zero() || q == Scalar(1) || q == Scalar(2); }

unsigned default_exponent(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Case1: return 1;
    case RegimeKind::Case2: return 2;
    default: return 0;
  }
}

// c = (q-1)^2 / (2q-3), the image of infinity under the B^2 ratio map.
Scalar b_squared_limit(const Scalar& q) { return (q - 1) * (q - 1) / (2 * q - 3); }

bool nominal_range(RegimeKind kind, const Scalar& q) {
  switch (kind) {
    case RegimeKind::Negative: return q.sign() < 0;
    case RegimeKind::Fibonacci: return q > Scalar(2);
    case RegimeKind::Case1: return q.sign() > 0 && q < kCase1Upper;
    case RegimeKind::Case3: return q > Scalar(1) && q <= kThreeHalves;
    case RegimeKind::Case3Modified: return q > kThreeHalves && q < kCase2Lower;
    case RegimeKind::Case2: return q >= kCase2Lower && q < Scalar(2);
  }
  return false;
}

}  // namespace

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Negative: return "negative";
    case RegimeKind::Fibonacci: return "fibonacci";
    case RegimeKind::Case1: return "case1";
    case RegimeKind::Case2: return "case2";
    case RegimeKind::Case3: return "case3";
    case RegimeKind::Case3Modified: return "case3-modified";
  }
  return "unknown";
}

RegimeKind parse_regime_kind(std::string_view text) {
  for (RegimeKind k : {RegimeKind::Negative, RegimeKind::Fibonacci, RegimeKind::Case1, RegimeKind::Case2,
                       RegimeKind::Case3, RegimeKind::Case3Modified}) {
    if (text == to_string(k)) return k;
  }
  throw DomainError("unknown regime '" + std::string(text) + "'");
}

std::string Certificate::failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

Regime make_regime(RegimeKind kind, const Scalar& q, unsigned m) {
  if (is_degenerate(q)) throw DomainError("q = " + q.to_string() + " is degenerate");
  Regime r;
  r.kind = kind;
  r.q = q;
  r.eval = Evaluation::attainable(q);
  r.m = m == 0 ? default_exponent(kind) : m;
  const Word s = parse_word("S");
  const Word b = parse_word("B");
  const Word bssb = parse_word("BSSB");

  switch (kind) {
    case RegimeKind::Negative: {
      if (q.sign() >= 0) throw DomainError("negative regime needs q < 0");
      const Scalar lambda = -q;
      r.eval = Evaluation::feasible(lambda);
      r.seed = Seed::K2;
      r.k_block = s;
      r.l_block = b;
      r.k_name = "S";
      r.l_name = "B";
      r.i_target = Interval::open_closed(1 / (lambda + 1), 1 / lambda);
      r.j_target = Interval::open_closed(0, 1 / (lambda + 1));
      r.domain = Interval::open_closed(0, 1 / lambda);
      r.m = 0;
      break;
    }
    case RegimeKind::Fibonacci: {
      if (q <= Scalar(2)) throw DomainError("fibonacci regime needs q > 2");
      r.seed = Seed::K3;
      r.k_block = b;
      r.l_block = parse_word("D");
      r.k_name = "B";
      r.l_name = "D";
      r.i_target = Interval::open(1 / (q - 1), 1);
      r.j_target = Interval::open_closed(1 / q, 1 / (q - 1));
      r.domain = Interval::open(1 / q, 1);
      r.mixed_lengths = true;
      r.m = 0;
      break;
    }
    case RegimeKind::Case1: {
      const Scalar c = b_squared_limit(q);
      r.seed = Seed::K4;
      r.k_block = repeat_word(s, 2 * r.m);
      r.l_block = repeat_word(b, 2);
      r.k_name = "S^" + std::to_string(2 * r.m);
      r.l_name = "B^2";
      r.i_target = Interval::below(c, true);
      r.j_target = Interval::open(c, 0);
      break;
    }
    case RegimeKind::Case2: {
      const Scalar c = b_squared_limit(q);
      r.seed = Seed::K3;
      r.k_block = repeat_word(s, 2 * r.m);
      r.l_block = repeat_word(b, 2);
      r.k_name = "S^" + std::to_string(2 * r.m);
      r.l_name = "B^2";
      r.i_target = Interval::above(c, true);
      r.j_target = Interval::open(1, c);
      break;
    }
    case RegimeKind::Case3: {
      r.seed = Seed::K4;
      r.k_block = repeat_word(s, 2);
      r.l_block = bssb;
      r.k_name = "S^2";
      r.l_name = "BS^2B";
      r.i_target = Interval::below(0, true);
      r.j_target = Interval::open_closed(0, kHalf);
      r.m = 0;
      break;
    }
    case RegimeKind::Case3Modified: {
      r.seed = Seed::K4;
      r.k_block = repeat_word(s, 4);
      r.l_block = bssb;
      r.k_name = "S^4";
      r.l_name = "BS^2B";
      r.i_target = Interval::below(-kHalf, true);
      r.j_target = Interval::open_closed(-kHalf, Scalar(Rational(14, 25)));
      r.m = 0;
      break;
    }
  }
  return r;
}

Certificate pingpong_certify(const Regime& regime) {
  Certificate cert;
  cert.regime = regime;
  auto record = [&](std::string name, bool ok, std::string detail = {}) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  const Witness seed = seed_witness(regime.seed);
  cert.base_ratio = ratio(witness_vector(seed, regime.eval));

  const Mat2 mk = word_matrix(regime.k_block, regime.eval);
  const Mat2 ml = word_matrix(regime.l_block, regime.eval);
  const bool nonsingular = !mk.det().is_zero() && !ml.det().is_zero();
  record("blocks-nonsingular", nonsingular, "det K = " + mk.det().to_string() + ", det L = " + ml.det().to_string());

  const Interval& i = regime.i_target;
  const Interval& j = regime.j_target;
  record("targets-disjoint", i.disjoint_from(j), i.to_string() + " vs " + j.to_string());
  record("base-in-targets", i.contains(cert.base_ratio) || j.contains(cert.base_ratio),
         "r0 = " + cert.base_ratio.to_string());

  if (nonsingular) {
    const Mobius fk = Mobius::from_matrix(mk);
    const Mobius fl = Mobius::from_matrix(ml);
    auto image = [](const Mobius& f, const Interval& x) -> std::optional<Interval> {
      try {
        return mobius_image(f, x);
      } catch (const DomainError&) {
        return std::nullopt;
      }
    };
    cert.k_image_i = image(fk, i);
    cert.k_image_j = image(fk, j);
    cert.l_image_i = image(fl, i);
    cert.l_image_j = image(fl, j);
    const bool pole_free = cert.k_image_i && cert.k_image_j && cert.l_image_i && cert.l_image_j;
    record("pole-free", pole_free, "K: " + fk.to_string() + ", L: " + fl.to_string());
    if (pole_free) {
      record("K-maps-into-I", cert.k_image_i->subset_of(i) && cert.k_image_j->subset_of(i),
             cert.k_image_i->to_string() + ", " + cert.k_image_j->to_string());
      record("L-maps-into-J", cert.l_image_i->subset_of(j) && cert.l_image_j->subset_of(j),
             cert.l_image_i->to_string() + ", " + cert.l_image_j->to_string());
      if (regime.mixed_lengths) {
        const bool outside = !cert.k_image_i->contains(cert.base_ratio) && !cert.k_image_j->contains(cert.base_ratio) &&
                             !cert.l_image_i->contains(cert.base_ratio) && !cert.l_image_j->contains(cert.base_ratio);
        record("base-outside-images", outside, "r0 = " + cert.base_ratio.to_string());
      }
    }
  }

  cert.certified = true;
  for (const auto& c : cert.checks) cert.certified = cert.certified && c.passed;
  return cert;
}

Regime regime_for(const Scalar& q, const RegimeOverride& override) {
  if (is_degenerate(q)) throw DomainError("q = " + q.to_string() + " is degenerate (q in {0, 1, 2})");

  auto attempt = [&](RegimeKind kind, unsigned m) -> std::optional<Regime> {
    try {
      Regime r = make_regime(kind, q, m);
      if (pingpong_certify(r).certified) return r;
    } catch (const DomainError&) {
    }
    return std::nullopt;
  };
  auto search = [&](RegimeKind kind) -> std::optional<Regime> {
    const bool has_m = kind == RegimeKind::Case1 || kind == RegimeKind::Case2;
    if (!has_m) return attempt(kind, 0);
    if (override.m) return attempt(kind, *override.m);
    for (unsigned m = default_exponent(kind); m <= kMaxBlockExponent; ++m) {
      if (auto r = attempt(kind, m)) return r;
    }
    return std::nullopt;
  };

  if (override.kind) {
    if (auto r = search(*override.kind)) return *r;
    throw CertificationError("regime " + to_string(*override.kind) + " does not certify at q = " + q.to_string());
  }

  constexpr std::array order{RegimeKind::Negative, RegimeKind::Fibonacci, RegimeKind::Case1,
                             RegimeKind::Case3,    RegimeKind::Case3Modified, RegimeKind::Case2};
  for (RegimeKind kind : order) {
    if (!nominal_range(kind, q)) continue;
    if (auto r = search(kind)) return *r;
  }
  if (q.sign() > 0 && q < Scalar(2)) {
    const RegimeKind fallback = q < kThreeHalves ? RegimeKind::Case1 : RegimeKind::Case2;
    if (auto r = search(fallback)) return *r;
  }
  throw CertificationError("no regime certifies at q = " + q.to_string());
}

Certificate certify(const Scalar& q, const RegimeOverride& override) {
  return pingpong_certify(regime_for(q, override));
}

}  // namespace chromaspec
