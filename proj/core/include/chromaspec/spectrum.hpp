#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromaspec/chromatic.hpp"
#include "chromaspec/constructive.hpp"
#include "chromaspec/graph.hpp"

namespace chromaspec {

enum class GraphClass { All, Planar, Connected, PlanarConnected };

std::string to_string(GraphClass cls);
GraphClass parse_graph_class(std::string_view text);
bool in_class(const Graph& g, GraphClass cls);

inline constexpr int kMaxCensusOrder = 8;

/// One canonically labeled representative per isomorphism class.
struct GraphCensus {
  int n = 0;
  GraphClass cls = GraphClass::All;
  std::vector<Graph> graphs;
  /// Canonical graph6 forms, sorted, parallel to `graphs`.
  std::vector<std::string> forms;
};

/// Builds the census by adding one edge at a time and keeping one graph per
/// canonical form. Throws GuardError for n above kMaxCensusOrder.
GraphCensus enumerate_census(int n, GraphClass cls = GraphClass::All);

struct Spectrum {
  Scalar q;
  int n = 0;
  GraphClass cls = GraphClass::All;
  /// Sorted, exactly deduplicated.
  std::vector<Scalar> values;
};

/// Distinct values of P_G(q) over `graphs`, evaluated in parallel.
std::vector<Scalar> spectrum_values(const std::vector<Poly>& polys, const Scalar& q, unsigned threads = 0);

/// Holds censuses and their chromatic polynomials so repeated spectra at
/// different q reuse the same work.
class SpectrumEnumerator {
 public:
  explicit SpectrumEnumerator(const ChromaticEngine& engine = default_engine(), unsigned threads = 0);

  const GraphCensus& census(int n, GraphClass cls);
  const std::vector<Poly>& polys(int n, GraphClass cls);
  Spectrum spectrum(int n, const Scalar& q, GraphClass cls);

 private:
  const ChromaticEngine& engine_;
  unsigned threads_;
  std::mutex mutex_;
  std::map<std::pair<int, GraphClass>, std::unique_ptr<GraphCensus>> censuses_;
  std::map<std::pair<int, GraphClass>, std::unique_ptr<std::vector<Poly>>> polys_;
};

/// Process-wide enumerator over the default engine.
SpectrumEnumerator& default_enumerator();

Spectrum compute_spectrum(int n, const Scalar& q, GraphClass cls = GraphClass::All);
/// Spectrum of an arbitrary graph list; every graph must have order n.
Spectrum compute_spectrum(const std::vector<Graph>& graphs, int n, const Scalar& q, GraphClass cls,
                          const ChromaticEngine& engine = default_engine(), unsigned threads = 0);

/// |P_{K_n}(-1)| == n!.
bool stanley_check(int n);

struct LowerBoundOptions {
  ConstructiveOptions constructive;
  RegimeOverride regime;
  /// Skip the exhaustive side even when n is small enough.
  bool constructive_only = false;
};

/// The clique-join reduction: witnesses at q - m on n - m vertices, joined
/// with K_m. Present for non-integer q > 0 once n >= ceil(q) + 2.
struct JoinShiftAudit {
  int m = 0;
  std::size_t exhaustive = 0;
  std::size_t constructive = 0;
  std::size_t words = 0;
  bool passed = false;
};

struct LowerBoundAudit {
  Scalar q;
  int n = 0;
  bool applicable = true;
  std::string regime;
  std::optional<std::size_t> exhaustive;
  std::size_t constructive = 0;
  std::size_t words = 0;
  /// The theorem bound is sqrt(words); compared in squared form.
  bool constructive_meets_bound = false;
  std::optional<bool> exhaustive_meets_constructive;
  std::optional<bool> constructive_subset;
  std::optional<JoinShiftAudit> join_shift;
  bool passed = false;
};

LowerBoundAudit lower_bound_audit(int n, const Scalar& q, const LowerBoundOptions& options = {});

}  // namespace chromaspec
