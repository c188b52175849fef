#include <benchmark/benchmark.h>

#include "dconic/batch.hpp"

namespace {

const std::vector<dconic::DiscreteConic>& corpus() {
  static const auto c = dconic::make_ellipse_corpus(256, 20240611);
  return c;
}

void BM_VerifySerial(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = dconic::verify_corpus_serial(corpus(), "all", 1e-8);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}

void BM_VerifyParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = dconic::verify_corpus_parallel(corpus(), "all", 1e-8);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}

void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto d = dconic::synthesize(0.75, 1.0, dconic::kTwoPi / n, 0.1, n);
    benchmark::DoNotOptimize(d);
  }
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Synthesize)->Arg(12)->Arg(256);

BENCHMARK_MAIN();
