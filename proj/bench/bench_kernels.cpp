// Serial reference vs OpenMP version of each parallel kernel.

#include <benchmark/benchmark.h>

#include "lpdyn/dynamics.hpp"
#include "lpdyn/experiments.hpp"
#include "lpdyn/generators.hpp"
#include "lpdyn/graph.hpp"

using namespace lpdyn;

namespace {

std::vector<std::uint64_t> seeds(int n) {
  std::vector<std::uint64_t> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

template <bool Parallel>
void BM_Ensemble(benchmark::State& state) {
  const Graph g = gen_cycle(static_cast<int>(state.range(0)));
  const Profile f0 = preset_profile(g, "cycle_step");
  RunConfig cfg;
  cfg.keep_cover_marks = false;
  const auto s = seeds(16);
  for (auto _ : state) {
    auto r = Parallel ? run_ensemble(g, f0, cfg, s) : run_ensemble_serial(g, f0, cfg, s);
    benchmark::DoNotOptimize(r.median);
  }
}

template <bool Parallel>
void BM_Diameter(benchmark::State& state) {
  const Graph g = gen_random_connected(static_cast<int>(state.range(0)), 0.02, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? diameter(g) : diameter_serial(g));
}

template <bool Parallel>
void BM_EnergyDecay(benchmark::State& state) {
  const Graph g = gen_random_connected(30, 0.2, 11);
  const Profile f0 = preset_profile(g, "uniform_random", {{"seed", 1}});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? energy_decay_test(g, f0, 2.5, 3, n) : energy_decay_test_serial(g, f0, 2.5, 3, n);
    benchmark::DoNotOptimize(r.estimate);
  }
}

template <bool Parallel>
void BM_Floor(benchmark::State& state) {
  std::vector<Schedule> sched;
  for (std::uint64_t i = 0; i < 16; ++i) sched.push_back(UniformRandom{i});
  const FloorParams prm{.n = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto r = Parallel ? floor_certify(Construction::cycle1, prm, sched)
                      : floor_certify_serial(Construction::cycle1, prm, sched);
    benchmark::DoNotOptimize(r.violations);
  }
}

template <bool Parallel>
void BM_Scaling(benchmark::State& state) {
  ScalingSpec spec;
  spec.sizes = {16, 24, 32};
  spec.reps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? scaling_study(spec) : scaling_study_serial(spec);
    benchmark::DoNotOptimize(r.pass);
  }
}

}  // namespace

BENCHMARK(BM_Ensemble<false>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ensemble<true>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Diameter<false>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Diameter<true>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyDecay<false>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyDecay<true>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Floor<false>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Floor<true>)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scaling<false>)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scaling<true>)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
