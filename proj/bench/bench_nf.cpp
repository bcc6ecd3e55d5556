// Normal form of random words: serial divide and conquer, the OpenMP task
// version, and the quadratic reference. Also the trial sweep, serial vs
// parallel.
#include <benchmark/benchmark.h>

#include "thompson/sweep.hpp"
#include "thompson/timing.hpp"

using namespace thompson;

namespace {

Word bench_word(std::int64_t n) {
  Rng rng(static_cast<std::uint64_t>(n));
  return random_word(static_cast<std::size_t>(n), 15, rng);
}

void BM_NfSerial(benchmark::State& state) {
  const Word w = bench_word(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nf_from_word(w));
  state.SetComplexityN(state.range(0));
}

void BM_NfParallel(benchmark::State& state) {
  const Word w = bench_word(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nf_from_word_parallel(w));
  state.SetComplexityN(state.range(0));
}

void BM_NfQuadratic(benchmark::State& state) {
  const Word w = bench_word(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nf_from_word_quadratic(w));
  state.SetComplexityN(state.range(0));
}

std::vector<ExchangeParams> sweep_grid() {
  const std::vector<unsigned> ss{2, 4, 6};
  const std::vector<std::size_t> ls{64};
  return make_grid(Variant::kSU, ss, ls, ls, 24, 3);
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = sweep_grid();
  const auto methods = applicable_methods(Variant::kSU, 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(grid, methods));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto grid = sweep_grid();
  const auto methods = applicable_methods(Variant::kSU, 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_parallel(grid, methods));
}

}  // namespace

BENCHMARK(BM_NfSerial)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NfParallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NfQuadratic)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
