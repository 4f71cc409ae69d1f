#include <benchmark/benchmark.h>

#include <limits>

#include "durasim/analytic.hpp"
#include "durasim/sim.hpp"

using namespace durasim;

namespace {

FaultParams scrubbed_params(double alpha) {
  FaultParams p;
  p.mv = 1.4e6;
  p.ml = 2.8e5;
  p.mrv = p.mrl = 1.0 / 3.0;
  p.mdl = 1460.0;
  p.alpha = alpha;
  return p;
}

SystemConfig scrubbed_config(double alpha) {
  SystemConfig c;
  c.r = 2;
  c.params = scrubbed_params(alpha);
  c.params.mdl.reset();
  c.scrub = ScrubPolicy::periodic(2920.0);
  return c;
}

void BM_mttdl_exact(benchmark::State& state) {
  const FaultParams p = scrubbed_params(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mttdl_exact(p).mttdl_hours);
  }
}
BENCHMARK(BM_mttdl_exact);

void BM_select_regime(benchmark::State& state) {
  const FaultParams p = scrubbed_params(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_regime(p).mttdl_hours);
  }
}
BENCHMARK(BM_select_regime);

void BM_simulate_trajectory(benchmark::State& state) {
  const SystemConfig c = scrubbed_config(0.5);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_trajectory(c, seed++).time_to_data_loss_hours);
  }
}
BENCHMARK(BM_simulate_trajectory);

void BM_estimate_mttdl(benchmark::State& state) {
  const SystemConfig c = scrubbed_config(0.5);
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_mttdl(c, n, 42, 0.95, 1).mean_hours);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_estimate_mttdl)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
