#include <benchmark/benchmark.h>

#include "fpbl/enumerate.hpp"

using namespace fpbl;

namespace {

void BM_FixedPointCounts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tau = static_cast<Pattern3>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_counts(n, tau));
}
BENCHMARK(BM_FixedPointCounts)
    ->Args({10, static_cast<int>(Pattern3::p321)})
    ->Args({10, static_cast<int>(Pattern3::p231)})
    ->Args({12, static_cast<int>(Pattern3::p231)})
    ->Unit(benchmark::kMillisecond);

void BM_ContainsPattern(benchmark::State& state) {
  std::vector<Permutation::value_type> v(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Permutation::value_type>(v.size() - i);
  const Permutation sigma(v);
  for (auto _ : state) benchmark::DoNotOptimize(avoids(sigma, Pattern3::p132));
}
BENCHMARK(BM_ContainsPattern)->Arg(100)->Arg(10000);

}  // namespace
