#include <benchmark/benchmark.h>

#include <numbers>
#include <sstream>

#include "lune/lune.h"

namespace {

void BM_SubtendedAngle(benchmark::State& state) {
  const lune::ChordArc chord(0.3, 2.1);
  lune::Complex u{0.1, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lune::subtended_angle(u, chord));
    u *= lune::Complex{0.999, 0.001};
  }
}
BENCHMARK(BM_SubtendedAngle);

void BM_DualityAllChords(benchmark::State& state) {
  lune::SweepConfig cfg;
  cfg.n_min = cfg.n_max = static_cast<std::size_t>(state.range(0));
  const auto inst = lune::build_instance(lune::generate_instance(cfg, 1));
  for (auto _ : state) benchmark::DoNotOptimize(lune::verify_angle_duality_all(inst.config, inst.weights));
}
BENCHMARK(BM_DualityAllChords)->Arg(8)->Arg(24)->Arg(50);

void BM_CongruenceOracle(benchmark::State& state) {
  lune::SweepConfig cfg;
  cfg.n_min = cfg.n_max = static_cast<std::size_t>(state.range(0));
  cfg.multiplicity_max = 1;
  const auto inst = lune::build_instance(lune::generate_instance(cfg, 1));
  const auto chord = lune::consecutive_pairs(inst.config).front();
  for (auto _ : state) benchmark::DoNotOptimize(lune::duality_congruence_oracle(inst.config, inst.weights, chord));
}
BENCHMARK(BM_CongruenceOracle)->Arg(8)->Arg(50);

void BM_Sweep(benchmark::State& state) {
  lune::SweepConfig cfg;
  cfg.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::ostringstream out;
    benchmark::DoNotOptimize(lune::run_sweep(cfg, out, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
