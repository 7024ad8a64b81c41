// Serial reference vs parallel bounds kernel, plus the 2x2 binary census.

#include <benchmark/benchmark.h>

#include "jsr/bounds.hpp"
#include "jsr/census.hpp"

using namespace jsr;

namespace {

ExactMatrix M(std::initializer_list<std::initializer_list<long>> rows) { return ExactMatrix::from_rows(rows); }

const MatrixSet& sigma3() {
  static const MatrixSet s({M({{0, 1}, {1, 0}}), M({{1, 1}, {0, 1}})});
  return s;
}

const MatrixSet& triple3() {
  static const MatrixSet s({M({{1, 1, 0}, {0, 0, 1}, {1, 0, 0}}), M({{0, 1, 0}, {1, 0, 1}, {0, 0, 1}}),
                            M({{1, 0, 0}, {1, 1, 0}, {0, 1, 0}})});
  return s;
}

const MatrixSet& pick(int which) { return which == 0 ? sigma3() : triple3(); }

void BM_Reference(benchmark::State& state) {
  const MatrixSet& set = pick(static_cast<int>(state.range(0)));
  const auto depth = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference_bounds_report(set, depth));
}

void BM_Parallel(benchmark::State& state) {
  const MatrixSet& set = pick(static_cast<int>(state.range(0)));
  const auto depth = static_cast<std::size_t>(state.range(1));
  EnumerationOptions opts;
  opts.prune = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(bounds_report(set, depth, opts));
}

void BM_Census(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(depth));
}

}  // namespace

// args: set (0 = 2x2 pair, 1 = 3x3 triple), depth
BENCHMARK(BM_Reference)->Args({0, 10})->Args({0, 12})->Args({1, 6})->Unit(benchmark::kMillisecond);
// args: set, depth, prune
BENCHMARK(BM_Parallel)
    ->Args({0, 10, 0})
    ->Args({0, 12, 0})
    ->Args({0, 12, 1})
    ->Args({1, 6, 0})
    ->Args({1, 6, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
