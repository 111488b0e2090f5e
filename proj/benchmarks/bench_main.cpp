#include <benchmark/benchmark.h>

#include "wavekin/analysis.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/rayconstruct.hpp"
#include "wavekin/wavemodel.hpp"

using namespace wavekin;

static void BM_ClosedForm(benchmark::State& state) {
  const BoostParams p{.beta = 0.6};
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(boosted_closed_form(p, {x, 0.5, 0.0, 1.0}));
    x += 1e-3;
  }
}
BENCHMARK(BM_ClosedForm);

static void BM_RayConstruction(benchmark::State& state) {
  const BoostParams p{.beta = 0.6};
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(interfere(p, {x, 0.5, 0.0, 1.0}));
    x += 1e-3;
  }
}
BENCHMARK(BM_RayConstruction);

static void BM_SampleGrid(benchmark::State& state) {
  const WaveField field(BoostParams{.beta = 0.6}, Provenance::ray_constructed);
  GridSpec spec;
  spec[AxisId::x] = {-10.0, 10.0, 401};
  spec[AxisId::y] = {-10.0, 10.0, 401};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_field(field, spec, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_SampleGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FrontSpeeds(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_front_speeds(BoostParams{.beta = 0.5}));
  }
}
BENCHMARK(BM_FrontSpeeds)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
