#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "zenosq/dynamics_oracle.hpp"
#include "zenosq/scenarios.hpp"

namespace {

using namespace zenosq;

void BM_GammaEnvCircuit(benchmark::State& state) {
  const Scenario s = circuit_preset();
  const double rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_env(s.spectrum, s.filter(), rel_tol));
  }
}
BENCHMARK(BM_GammaEnvCircuit)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_GammaEnvHydrogen(benchmark::State& state) {
  const Scenario s = hydrogen_preset();
  const double rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_env(s.spectrum, s.filter(), rel_tol));
  }
}
BENCHMARK(BM_GammaEnvHydrogen)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_Figure2Sweep(benchmark::State& state) {
  const auto grid = default_figure2_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(figure2_sweep(grid, hydrogen_preset(), kDefaultRelTol, 1));
  }
}
BENCHMARK(BM_Figure2Sweep)->Unit(benchmark::kMillisecond);

void BM_DiscretizeBath(benchmark::State& state) {
  const Scenario s = circuit_preset();
  const FilterSpec filter{1.0, 1.0};
  const auto lobes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discretize_bath(s.spectrum, filter, lobes, 80));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lobes) * 80);
}
BENCHMARK(BM_DiscretizeBath)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EvolveInterval(benchmark::State& state) {
  const Scenario s = circuit_preset();
  const FilterSpec filter{1.0, 1.0};
  const BathDiscretization bath =
      discretize_bath(s.spectrum, filter, static_cast<std::size_t>(state.range(0)), 80);
  const SqueezedFrame frame = squeezed_frame(resonant_lab(1.5, 0.006, 1.0));
  const double dt = default_dt_max(frame, bath);
  const auto picture = static_cast<Picture>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_interval(SingleExcitationState::excited(bath.modes.size()),
                                             frame, bath, 1.0, dt, picture));
  }
  state.counters["modes"] = static_cast<double>(bath.modes.size());
  state.counters["steps"] = std::ceil(1.0 / dt);
}
BENCHMARK(BM_EvolveInterval)
    ->Args({10, static_cast<int>(Picture::kInteraction)})
    ->Args({10, static_cast<int>(Picture::kSchrodinger)})
    ->Args({40, static_cast<int>(Picture::kInteraction)})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
