#include <complex>

#include <benchmark/benchmark.h>

#include "bje/analytic.hpp"
#include "bje/hypergeom.hpp"

namespace {

void BM_Hyp2f1(benchmark::State& state) {
  const std::complex<double> x(0.3 * static_cast<double>(state.range(0)) / 10.0, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(bje::hyp2f1(1.3, 2.2, 3.7, x));
}
BENCHMARK(BM_Hyp2f1)->Arg(1)->Arg(25)->Arg(60);

void BM_DensityIII(benchmark::State& state) {
  const bje::JacobiParams p(0.5, 0.5, 1.0);
  double x = 0.0;
  for (auto _ : state) {
    x = x > 0.98 ? 0.01 : x + 0.01;
    benchmark::DoNotOptimize(bje::density_III(p, x));
  }
}
BENCHMARK(BM_DensityIII);

}  // namespace
