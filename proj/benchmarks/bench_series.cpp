#include <benchmark/benchmark.h>

#include "fpbl/distance.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/series.hpp"

using namespace fpbl;

namespace {

SeriesBudgets unlimited() { return SeriesBudgets::parse("100000"); }

void BM_GSeriesPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto b = unlimited();
  for (auto _ : state) benchmark::DoNotOptimize(g_series_poly(n, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GSeriesPoly)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_GSeriesScaled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto b = unlimited();
  for (auto _ : state) benchmark::DoNotOptimize(g_series_scaled(Rational(7, 3), n, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GSeriesScaled)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ExactColumns(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto b = unlimited();
  for (auto _ : state) benchmark::DoNotOptimize(column_series(n, n, SeriesMode::exact_eval, b));
}
BENCHMARK(BM_ExactColumns)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

void BM_WeightedColumns(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto b = unlimited();
  for (auto _ : state) benchmark::DoNotOptimize(weighted_columns(3.0, 0.25, n, n, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeightedColumns)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FactorialMoments(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto b = unlimited();
  for (auto _ : state) benchmark::DoNotOptimize(series_factorial_moments(3, n, 3, b));
}
BENCHMARK(BM_FactorialMoments)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScaledFloatPmf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PmfOptions opt;
  opt.budgets = unlimited();
  for (auto _ : state) benchmark::DoNotOptimize(fp_pmf({n, 4, Pattern3::p321}, PmfMode::scaled_float, opt));
}
BENCHMARK(BM_ScaledFloatPmf)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
