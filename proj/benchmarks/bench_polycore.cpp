#include <benchmark/benchmark.h>

#include <random>

#include "lune/lune.h"

namespace {

lune::Instance sweep_instance(std::size_t n_max, int mmax, std::size_t index) {
  lune::SweepConfig cfg;
  cfg.n_min = n_max;
  cfg.n_max = n_max;
  cfg.multiplicity_max = mmax;
  return lune::build_instance(lune::generate_instance(cfg, index));
}

void BM_ExpandFromRoots(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<lune::Complex> roots;
  for (std::size_t k = 0; k < n; ++k) roots.push_back(lune::unit_point(0.37 * static_cast<double>(k * k)));
  for (auto _ : state) benchmark::DoNotOptimize(lune::expand_from_roots(roots));
}
BENCHMARK(BM_ExpandFromRoots)->Arg(8)->Arg(24)->Arg(50);

void BM_ConvexCombination(benchmark::State& state) {
  const auto inst = sweep_instance(static_cast<std::size_t>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(lune::convex_combination(inst.config, inst.weights));
}
BENCHMARK(BM_ConvexCombination)->Arg(8)->Arg(24)->Arg(50);

void BM_FindRoots(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  std::vector<lune::Complex> roots;
  for (std::size_t k = 0; k < n; ++k) roots.emplace_back(u(rng), u(rng));
  const auto p = lune::expand_from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(lune::find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(8)->Arg(24)->Arg(50);

void BM_RootsOfCombination(benchmark::State& state) {
  const auto inst = sweep_instance(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(lune::roots_of_combination(inst.config, inst.weights));
}
BENCHMARK(BM_RootsOfCombination)->Args({8, 1})->Args({24, 1})->Args({50, 1})->Args({50, 4});

}  // namespace
