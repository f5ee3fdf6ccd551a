#include "chromaspec/spectrum.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_set>

#include "chromaspec/canonical.hpp"
#include "chromaspec/errors.hpp"
#include "chromaspec/graph6.hpp"
#include "chromaspec/graph_ops.hpp"
#include "chromaspec/graph_props.hpp"

namespace chromaspec {
namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::string> all_forms(int n) {
  if (n < 0 || n > kMaxCensusOrder) {
    throw GuardError("census order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxCensusOrder));
  }
  std::vector<std::string> level{canonical_form(Graph(n))};
  std::vector<std::string> out = level;
  while (!level.empty()) {
    std::unordered_set<std::string> next;
    for (const auto& form : level) {
      auto rows = graph6_decode(form).adjacency_rows();
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if ((rows[static_cast<std::size_t>(a)] >> b) & 1U) continue;
          rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
          rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
          next.insert(canonical_form_rows(rows));
          rows[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
          rows[static_cast<std::size_t>(b)] &= ~(std::uint64_t{1} << a);
        }
      }
    }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::All: return "all";
    case GraphClass::Planar: return "planar";
    case GraphClass::Connected: return "connected";
    case GraphClass::PlanarConnected: return "planar-connected";
  }
  return "unknown";
}

GraphClass parse_graph_class(std::string_view text) {
  for (GraphClass c : {GraphClass::All, GraphClass::Planar, GraphClass::Connected, GraphClass::PlanarConnected}) {
    if (text == to_string(c)) return c;
  }
  throw DomainError("unknown graph class '" + std::string(text) + "'");
}

bool in_class(const Graph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::All: return true;
    case GraphClass::Planar: return is_planar(g);
    case GraphClass::Connected: return is_connected(g);
    case GraphClass::PlanarConnected: return is_connected(g) && is_planar(g);
  }
  return false;
}

GraphCensus enumerate_census(int n, GraphClass cls) {
  GraphCensus census;
  census.n = n;
  census.cls = cls;
  for (auto& form : all_forms(n)) {
    Graph g = graph6_decode(form);
    if (!in_class(g, cls)) continue;
    census.graphs.push_back(std::move(g));
    census.forms.push_back(std::move(form));
  }
  return census;
}

std::vector<Scalar> spectrum_values(const std::vector<Poly>& polys, const Scalar& q, unsigned threads) {
  std::vector<Scalar> values(polys.size());
  parallel_for(polys.size(), threads, [&](std::size_t i) { values[i] = polys[i].eval(q); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

SpectrumEnumerator::SpectrumEnumerator(const ChromaticEngine& engine, unsigned threads)
    : engine_(engine), threads_(threads) {}

const GraphCensus& SpectrumEnumerator::census(int n, GraphClass cls) {
  std::lock_guard lock(mutex_);
  auto& slot = censuses_[{n, cls}];
  if (!slot) {
    auto& all = censuses_[{n, GraphClass::All}];
    if (!all) all = std::make_unique<GraphCensus>(enumerate_census(n, GraphClass::All));
    if (cls == GraphClass::All) return *all;
    auto filtered = std::make_unique<GraphCensus>();
    filtered->n = n;
    filtered->cls = cls;
    for (std::size_t i = 0; i < all->graphs.size(); ++i) {
      if (!in_class(all->graphs[i], cls)) continue;
      filtered->graphs.push_back(all->graphs[i]);
      filtered->forms.push_back(all->forms[i]);
    }
    censuses_[{n, cls}] = std::move(filtered);
  }
  return *censuses_[{n, cls}];
}

const std::vector<Poly>& SpectrumEnumerator::polys(int n, GraphClass cls) {
  const GraphCensus& c = census(n, cls);
  std::lock_guard lock(mutex_);
  auto& slot = polys_[{n, cls}];
  if (!slot) {
    auto out = std::make_unique<std::vector<Poly>>(c.graphs.size());
    parallel_for(c.graphs.size(), threads_, [&](std::size_t i) { (*out)[i] = engine_.chromatic_poly(c.graphs[i]); });
    slot = std::move(out);
  }
  return *slot;
}

Spectrum SpectrumEnumerator::spectrum(int n, const Scalar& q, GraphClass cls) {
  return {q, n, cls, spectrum_values(polys(n, cls), q, threads_)};
}

SpectrumEnumerator& default_enumerator() {
  static SpectrumEnumerator enumerator;
  return enumerator;
}

Spectrum compute_spectrum(int n, const Scalar& q, GraphClass cls) { return default_enumerator().spectrum(n, q, cls); }

Spectrum compute_spectrum(const std::vector<Graph>& graphs, int n, const Scalar& q, GraphClass cls,
                          const ChromaticEngine& engine, unsigned threads) {
  std::vector<Poly> polys;
  polys.reserve(graphs.size());
  for (const auto& g : graphs) {
    if (g.order() != n) throw DomainError("graph of order " + std::to_string(g.order()) + " in an order-" + std::to_string(n) + " list");
    if (!in_class(g, cls)) throw DomainError("graph " + graph6_encode(g.underlying_simple()) + " is not " + to_string(cls));
  }
  polys.resize(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) { polys[i] = engine.chromatic_poly(graphs[i]); });
  return {q, n, cls, spectrum_values(polys, q, threads)};
}

bool stanley_check(int n) {
  if (n < 0 || n > 10) throw GuardError("stanley_check supports n <= 10");
  Integer factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return abs(chromatic_poly(Graph::complete(n)).eval(Integer(-1))) == factorial;
}

LowerBoundAudit lower_bound_audit(int n, const Scalar& q, const LowerBoundOptions& options) {
  LowerBoundAudit audit;
  audit.q = q;
  audit.n = n;
  const Regime regime = regime_for(q, options.regime);
  audit.regime = to_string(regime.kind);
  if (n < seed_order(regime.seed)) {
    audit.applicable = false;
    audit.passed = true;
    return audit;
  }

  const ConstructiveReport report = distinct_witness_values(n, regime, options.constructive);
  audit.constructive = report.values.size();
  audit.words = report.plan.words.size();
  audit.constructive_meets_bound = report.sqrt_bound_holds && report.counts_match;
  audit.passed = audit.constructive_meets_bound && (!report.audited || report.audit_passed);

  const bool exhaustive = !options.constructive_only && n <= kMaxCensusOrder;
  if (exhaustive) {
    const Spectrum pl = compute_spectrum(n, q, GraphClass::Planar);
    audit.exhaustive = pl.values.size();
    audit.exhaustive_meets_constructive = pl.values.size() >= report.values.size();
    audit.constructive_subset = std::includes(pl.values.begin(), pl.values.end(), report.values.begin(), report.values.end());
    audit.passed = audit.passed && *audit.exhaustive_meets_constructive && *audit.constructive_subset;
  }

  const bool non_integer = q.sign() > 0 && !q.is_integer();
  if (non_integer) {
    const Integer ceiling = q.ceil();
    const int m = static_cast<int>(ceiling.get_si());
    if (n >= m + 2) {
      JoinShiftAudit js;
      js.m = m;
      const ConstructiveReport shifted = distinct_witness_values(n - m, make_regime(RegimeKind::Negative, q - m),
                                                                 options.constructive);
      const Scalar factor = falling_factorial(q, static_cast<unsigned>(m));
      std::vector<Scalar> lifted;
      for (const auto& v : shifted.values) lifted.push_back(v * factor);
      std::sort(lifted.begin(), lifted.end());
      lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
      js.constructive = lifted.size();
      js.words = shifted.plan.words.size();
      const Integer size = static_cast<unsigned long>(js.constructive);
      js.passed = size * size >= (Integer(1) << (n - m - 2));
      if (exhaustive) {
        const Spectrum all = compute_spectrum(n, q, GraphClass::All);
        js.exhaustive = all.values.size();
        js.passed = js.passed && std::includes(all.values.begin(), all.values.end(), lifted.begin(), lifted.end());
      }
      audit.passed = audit.passed && js.passed;
      audit.join_shift = js;
    }
  }
  return audit;
}

}  // namespace chromaspec
