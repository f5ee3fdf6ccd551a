#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromaspec/chromatic.hpp"

namespace chromaspec {

struct VerifyOptions {
  std::size_t instances = 200;
  std::uint64_t seed = 20240601;
  /// Largest order for random graphs and for the coloring-count oracle.
  int n_max = 7;
  int k_max = 4;
  /// Run only this lemma when non-empty.
  std::string lemma;
};

struct LemmaResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

/// Names accepted by VerifyOptions::lemma, in run order.
const std::vector<std::string>& lemma_names();

/// Randomized identity suite; deterministic for a fixed seed. Throws
/// DomainError for an unknown lemma name.
std::vector<LemmaResult> run_verify(const VerifyOptions& options = {},
                                    const ChromaticEngine& engine = default_engine());

}  // namespace chromaspec
