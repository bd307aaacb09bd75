#include <benchmark/benchmark.h>

#include "glogis/logistic.hpp"
#include "glogis/quadrature.hpp"
#include "glogis/spectral.hpp"
#include "glogis/special_functions.hpp"

namespace {

void BM_GammaReal(benchmark::State& state) {
  double x = 3.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::gamma({x, 0.0}));
    x = x < 19.0 ? x + 0.1 : 3.7;
  }
}
BENCHMARK(BM_GammaReal);

void BM_GammaVerticalLine(benchmark::State& state) {
  const double y = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::gamma({1.0, y}));
  }
}
BENCHMARK(BM_GammaVerticalLine)->Arg(1)->Arg(10)->Arg(50);

void BM_GammaReflection(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::gamma({-4.3, 2.6}));
  }
}
BENCHMARK(BM_GammaReflection);

void BM_Hyp2f1(benchmark::State& state) {
  const glogis::Complex a(1.0, 1.0), b(0.5, 0.0), c(2.5, 0.0);
  const glogis::Complex z(0.01 * static_cast<double>(state.range(0)), 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::hyp2f1(a, b, c, z));
  }
}
BENCHMARK(BM_Hyp2f1)->Arg(10)->Arg(50)->Arg(90);

void BM_LogisticDerivative(benchmark::State& state) {
  const glogis::SigmoidParams p(1.0, 2.0, 4.0);
  double t = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::derivative(p, t));
    t = t < 6.0 ? t + 1e-3 : -6.0;
  }
}
BENCHMARK(BM_LogisticDerivative);

void BM_ClosedFormSpectrum(benchmark::State& state) {
  const glogis::SigmoidParams p(1.0, 2.0, 4.0);
  double w = -15.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::fourier_closed_form(p, w));
    w = w < 15.0 ? w + 0.1 : -15.0;
  }
}
BENCHMARK(BM_ClosedFormSpectrum);

void BM_SampleSpectrum(benchmark::State& state) {
  const glogis::SigmoidParams p(1.0, 2.0, 4.0);
  const glogis::FrequencyGrid grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::sample_spectrum(p, grid));
  }
}
BENCHMARK(BM_SampleSpectrum)->Arg(256)->Arg(1201);

void BM_FourierNumeric(benchmark::State& state) {
  const glogis::SigmoidParams p(1.0, 2.0, 1.0);
  const double w = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glogis::fourier_numeric(p, w));
  }
}
BENCHMARK(BM_FourierNumeric)->Arg(0)->Arg(5)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
