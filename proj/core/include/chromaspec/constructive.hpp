#pragma once

#include <cstddef>
#include <vector>

#include "chromaspec/pingpong.hpp"

namespace chromaspec {

/// A block word: true for L, false for K.
using BlockWord = std::vector<bool>;

struct ConstructiveOptions {
  /// Worker count for vector prediction; 0 uses the hardware concurrency.
  unsigned threads = 0;
  /// Rebuild every witness graph and recompute its values with the chromatic engine.
  bool audit = false;
  const ChromaticEngine* engine = nullptr;
  /// Refuse plans with more words than this.
  std::size_t max_words = std::size_t{1} << 22;
};

/// Which block words reach the target order, and how many leaves pad them.
struct WordPlan {
  int n = 0;
  /// Block count for balanced and uniform plans; unused by mixed-length regimes.
  int blocks = 0;
  int padding = 0;
  std::vector<BlockWord> words;
  /// Closed-form size of the word set: 2^t, F_{n-2} or binom(2t, t).
  Integer expected_count;
};

/// Throws DomainError when n is below the seed order.
WordPlan plan_words(const Regime& regime, int n);

struct ConstructiveReport {
  Scalar q;
  int n = 0;
  Regime regime;
  WordPlan plan;
  /// Sorted distinct values of P_{G-e}(q) and P_G(q) over all words.
  std::vector<Scalar> values;
  bool counts_match = false;
  /// |values|^2 >= number of words.
  bool sqrt_bound_holds = false;
  bool audited = false;
  bool audit_passed = false;
  std::vector<std::string> audit_failures;
};

Word expand_block_word(const Regime& regime, const BlockWord& word);

/// Predicts every witness vector by matrix products, checks the ratios are
/// pairwise distinct (a collision throws CertificationError) and collects the
/// values of the n-vertex planar graphs G - e and G.
ConstructiveReport distinct_witness_values(int n, const Scalar& q, const ConstructiveOptions& options = {});
ConstructiveReport distinct_witness_values(int n, const Regime& regime, const ConstructiveOptions& options = {});

}  // namespace chromaspec
