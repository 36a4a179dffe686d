#include <benchmark/benchmark.h>

#include "bje/coeffs.hpp"
#include "bje/eigen.hpp"
#include "bje/spectral.hpp"

namespace {

void BM_EigenValuesOnly(benchmark::State& state) {
  const auto t = bje::tridiag_entries(bje::ModelKind::AssocIII, bje::JacobiParams(0.5, 0.5, 1.0),
                                      static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bje::eigen_tridiagonal(t, false));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigenValuesOnly)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_GaussQuadrature(benchmark::State& state) {
  const bje::JacobiParams p(0.3, 0.7, 1.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(bje::gauss_quadrature(bje::ModelKind::AssocIII, p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussQuadrature)->Arg(64)->Arg(256);

}  // namespace
