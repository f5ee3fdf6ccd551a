#include <benchmark/benchmark.h>

#include "chromaspec/canonical.hpp"
#include "chromaspec/constructive.hpp"
#include "chromaspec/semigroup.hpp"
#include "chromaspec/spectrum.hpp"

using namespace chromaspec;

namespace {

void BM_CensusEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_census(n).graphs.size());
}
BENCHMARK(BM_CensusEnumeration)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_ChromaticCensus(benchmark::State& state) {
  const auto census = enumerate_census(7);
  for (auto _ : state) {
    ChromaticEngine engine(ChromaticOptions{false, 12});
    for (const Graph& g : census.graphs) benchmark::DoNotOptimize(engine.chromatic_poly(g));
  }
}
BENCHMARK(BM_ChromaticCensus)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(9)->Arg(12);

void BM_PredictWords(benchmark::State& state) {
  const Evaluation eval = Evaluation::feasible(1);
  const Vec2 start = feasible_vector(seed_witness(Seed::K2), Scalar(1));
  for (auto _ : state) {
    for (unsigned bits = 0; bits < (1u << 14); ++bits) {
      Word w;
      for (int i = 0; i < 14; ++i) w.push_back((bits >> i) & 1u ? Letter::B : Letter::S);
      benchmark::DoNotOptimize(predict_vector(w, start, eval));
    }
  }
}
BENCHMARK(BM_PredictWords)->Unit(benchmark::kMillisecond);

void BM_ConstructiveValues(benchmark::State& state) {
  ConstructiveOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(distinct_witness_values(16, Scalar(-1), options).values.size());
}
BENCHMARK(BM_ConstructiveValues)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
