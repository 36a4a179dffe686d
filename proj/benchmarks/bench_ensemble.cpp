#include <benchmark/benchmark.h>

#include "bje/eigen.hpp"
#include "bje/ensemble.hpp"

namespace {

void BM_SampleModel(benchmark::State& state) {
  const auto cfg = bje::EnsembleConfig::from_c(static_cast<int>(state.range(0)), 1.0, 0.5, 0.5);
  bje::Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(bje::sample_model(cfg, rng));
}
BENCHMARK(BM_SampleModel)->Arg(60)->Arg(1000);

void BM_EmpiricalMeasure(benchmark::State& state) {
  const auto cfg = bje::EnsembleConfig::from_c(static_cast<int>(state.range(0)), 1.0, 0.5, 0.5);
  bje::Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(bje::empirical_measure(cfg, rng));
}
BENCHMARK(BM_EmpiricalMeasure)->Arg(60)->Arg(400);

void BM_ExactMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bje::exact_moment(n, 1.0 / n, 0.5, 0.5, 8));
}
BENCHMARK(BM_ExactMoment)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
