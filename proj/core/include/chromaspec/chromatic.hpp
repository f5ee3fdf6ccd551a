#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "chromaspec/canonical.hpp"
#include "chromaspec/graph.hpp"
#include "chromaspec/poly.hpp"

namespace chromaspec {

/// Memo table from canonical form to chromatic polynomial. Concurrent
/// insert-or-get; racing writers store equal values, so the last one wins.
class ChromaticCache {
 public:
  static constexpr std::string_view kFileHeader = "chromaspec-chromatic-cache v1";

  [[nodiscard]] std::optional<Poly> find(const std::string& key) const;
  void insert(const std::string& key, const Poly& value);
  [[nodiscard]] std::size_t size() const;
  void clear();

  /// Merges records from a cache file; throws DomainError on a bad header or record.
  void load(const std::filesystem::path& path);
  /// Writes all records sorted by key, so identical contents give identical files.
  void save(const std::filesystem::path& path) const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Poly> table_;
};

struct ChromaticOptions {
  bool use_cache = true;
  /// Graphs above this order are never cached (no weaker key is used).
  int canonical_limit = kDefaultCanonicalLimit;
};

/// Deletion-contraction at the polynomial level.
///
/// Before recursing: loops give 0, parallel edges collapse, isolated vertices
/// contribute x, pendant vertices (x - 1), components multiply. The pivot is the
/// lexicographically smallest edge (a, b) of the reduced graph, so recursion
/// trees are reproducible.
class ChromaticEngine {
 public:
  explicit ChromaticEngine(ChromaticOptions options = {}, std::shared_ptr<ChromaticCache> cache = nullptr);

  [[nodiscard]] Poly chromatic_poly(const Graph& g) const;

  [[nodiscard]] const ChromaticOptions& options() const noexcept { return options_; }
  [[nodiscard]] ChromaticCache& cache() const noexcept { return *cache_; }

 private:
  struct Reduced;
  Poly solve(Reduced g) const;
  Poly solve_connected(const Reduced& g) const;

  ChromaticOptions options_;
  std::shared_ptr<ChromaticCache> cache_;
};

/// Process-wide engine with caching enabled.
ChromaticEngine& default_engine();

Poly chromatic_poly(const Graph& g);

/// Number of proper k-colorings by enumerating all k^n assignments.
/// Throws GuardError when k^n exceeds `budget`.
Integer count_colorings(const Graph& g, unsigned k, std::uint64_t budget = 100'000'000);

/// Z_G(lambda) = (-1)^n P_G(-lambda).
Scalar z_value(const Graph& g, const Scalar& lambda, const ChromaticEngine& engine = default_engine());

/// Z_G = Z_{G-e} + Z_{G/e} at lambda.
bool check_additive_dc(const Graph& g, const EdgeRef& e, const Scalar& lambda,
                       const ChromaticEngine& engine = default_engine());
/// P_H = P_{G/e} + (x - 2) P_{G-e} where H is B(G, e) with e removed.
bool check_polyid(const Graph& g, const EdgeRef& e, const ChromaticEngine& engine = default_engine());
/// P_{G v K_m}(x) = (x)_m P_G(x - m), coefficient-wise.
bool check_join_shift(const Graph& g, int m, const ChromaticEngine& engine = default_engine());
/// Attaching a leaf at v multiplies P by (x - 1).
bool check_leaf_identity(const Graph& g, int v, const ChromaticEngine& engine = default_engine());
/// Degree n, leading coefficient 1 and coefficients alternating in sign.
bool has_alternating_signs(const Poly& p, int n);

}  // namespace chromaspec
