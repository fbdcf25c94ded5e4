// Serial reference summation against the OpenMP kernel on the CI complex.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "nilchain/sum_engine.hpp"

using namespace nilchain;

namespace {

const RootSystemSpec kSpecs[] = {{Family::A, 3}, {Family::B, 3}, {Family::A, 4}, {Family::D, 4}};

void BM_Reference(benchmark::State& state) {
  const RootSystemSpec& spec = kSpecs[state.range(0)];
  const RootSystem rs(spec);
  std::uint64_t chains = 0;
  for (auto _ : state) {
    const ComplexSummary s = summarize_complex_reference(rs, ComplexKind::CI);
    chains = s.counts.total;
    benchmark::DoNotOptimize(s);
  }
  state.SetLabel(spec.name());
  state.counters["chains/s"] = benchmark::Counter(static_cast<double>(chains), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Kernel(benchmark::State& state) {
  const RootSystemSpec& spec = kSpecs[state.range(0)];
  const RootSystem rs(spec);
  const ChainSpace space = make_chain_space(rs, ComplexKind::CI);
  const int threads = state.range(1) == 0 ? omp_get_max_threads() : static_cast<int>(state.range(1));
  std::uint64_t chains = 0;
  for (auto _ : state) {
    const ComplexSummary s = summarize_complex(space, threads);
    chains = s.counts.total;
    benchmark::DoNotOptimize(s);
  }
  state.SetLabel(spec.name() + " threads=" + std::to_string(threads));
  state.counters["chains/s"] = benchmark::Counter(static_cast<double>(chains), benchmark::Counter::kIsIterationInvariantRate);
}

}  // namespace

BENCHMARK(BM_Reference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
// Second argument 0 means omp_get_max_threads().
BENCHMARK(BM_Kernel)->ArgsProduct({{0, 1, 2, 3}, {1, 0}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
