#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromaspec/interval.hpp"
#include "chromaspec/semigroup.hpp"

namespace chromaspec {

enum class RegimeKind { Negative, Fibonacci, Case1, Case2, Case3, Case3Modified };

std::string to_string(RegimeKind kind);
RegimeKind parse_regime_kind(std::string_view text);

/// Seed witness, two blocks K and L over {S, B} and target intervals: every
/// block word must send the base ratio into I when it ends in K and into J
/// when it ends in L.
struct Regime {
  RegimeKind kind = RegimeKind::Negative;
  Scalar q;
  Evaluation eval;
  Seed seed = Seed::K2;
  Word k_block;
  Word l_block;
  std::string k_name;
  std::string l_name;
  Interval i_target = Interval::real_line();
  Interval j_target = Interval::real_line();
  /// Interval the blocks act on, when it is narrower than I u J's hull.
  std::optional<Interval> domain;
  /// Exponent in S^{2m}; zero when the regime has no such parameter.
  unsigned m = 0;
  /// Words of different block counts reach the same order.
  bool mixed_lengths = false;

  [[nodiscard]] int block_vertices_k() const { return static_cast<int>(k_block.size()); }
  [[nodiscard]] int block_vertices_l() const { return static_cast<int>(l_block.size()); }
};

struct ConditionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  Regime regime;
  Scalar base_ratio;
  std::optional<Interval> k_image_i;
  std::optional<Interval> k_image_j;
  std::optional<Interval> l_image_i;
  std::optional<Interval> l_image_j;
  std::vector<ConditionCheck> checks;
  bool certified = false;

  /// Name of the first failed condition, empty when certified.
  [[nodiscard]] std::string failure() const;
};

/// Builds the regime of the given kind at q. m = 0 picks the kind's default.
Regime make_regime(RegimeKind kind, const Scalar& q, unsigned m = 0);

/// Checks every condition with exact endpoint arithmetic. Never throws for a
/// failed condition; the result records which one failed.
Certificate pingpong_certify(const Regime& regime);

struct RegimeOverride {
  std::optional<RegimeKind> kind;
  std::optional<unsigned> m;
};

inline constexpr unsigned kMaxBlockExponent = 16;

/// The first certifiable regime for q. Throws DomainError for q in {0, 1, 2}
/// and CertificationError when nothing certifies.
Regime regime_for(const Scalar& q, const RegimeOverride& override = {});
/// regime_for followed by pingpong_certify.
Certificate certify(const Scalar& q, const RegimeOverride& override = {});

}  // namespace chromaspec
