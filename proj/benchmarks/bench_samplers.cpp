#include <benchmark/benchmark.h>

#include "fpbl/dyck.hpp"
#include "fpbl/random.hpp"
#include "fpbl/samplers.hpp"

using namespace fpbl;

namespace {

void BM_Philox(benchmark::State& state) {
  RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rng());
}
BENCHMARK(BM_Philox);

void BM_UniformDyck(benchmark::State& state) {
  RandomSource rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_dyck(n, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UniformDyck)->Arg(100)->Arg(1000)->Arg(10000);

void BM_UniformAvoider(benchmark::State& state) {
  RandomSource rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tau = static_cast<Pattern3>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(uniform_avoider(n, tau, rng));
}
BENCHMARK(BM_UniformAvoider)
    ->Args({1000, static_cast<int>(Pattern3::p321)})
    ->Args({1000, static_cast<int>(Pattern3::p132)})
    ->Args({1000, static_cast<int>(Pattern3::p123)});

void BM_UnrestrictedSampler(benchmark::State& state) {
  RandomSource rng(4);
  const UnrestrictedSampler sampler(static_cast<std::size_t>(state.range(0)), Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_UnrestrictedSampler)->Arg(6)->Arg(100)->Arg(1000);

void BM_FixedPointCount(benchmark::State& state) {
  RandomSource rng(5);
  const FixedPointCountSampler sampler({1000, 4, Pattern3::p321}, PmfMode::scaled_float);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_FixedPointCount);

void BM_MonteCarloPmf(benchmark::State& state) {
  const RandomSource rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_fp_pmf(1000, Pattern3::p123, 10000, rng));
}
BENCHMARK(BM_MonteCarloPmf)->Unit(benchmark::kMillisecond);

}  // namespace
