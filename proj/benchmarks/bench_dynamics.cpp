#include <benchmark/benchmark.h>

#include "bje/dynamics.hpp"

namespace {

void BM_EmStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bje::ParticleState s;
  for (int i = 0; i < n; ++i) s.lambda.push_back(0.1 + 0.8 * i / (n - 1.0));
  const auto p = bje::DynamicsParams::from_c(n, 1.0, 0.5, 0.5);
  bje::Rng rng(3);
  for (auto _ : state) {
    s = bje::em_step(s, 1e-5, p, rng);
    benchmark::DoNotOptimize(s.lambda.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EmStep)->RangeMultiplier(2)->Range(10, 160)->Complexity();

void BM_IntegrateMoments(benchmark::State& state) {
  const bje::JacobiParams p(0.5, 0.5, 1.0);
  std::vector<double> m(9, 1.0);
  for (std::size_t k = 1; k < m.size(); ++k) m[k] = m[k - 1] * 0.3;
  const bje::MomentVector m0(m);
  for (auto _ : state) benchmark::DoNotOptimize(bje::integrate_moments(m0, p, 10.0, 1e-3));
}
BENCHMARK(BM_IntegrateMoments)->Unit(benchmark::kMillisecond);

}  // namespace
