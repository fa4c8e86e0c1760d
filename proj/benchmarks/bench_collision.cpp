#include <benchmark/benchmark.h>

#include <random>

#include "wavekin/collision.hpp"
#include "wavekin/integrator.hpp"
#include "wavekin/weakform.hpp"

using namespace wavekin;

namespace {

Spectrum random_spectrum(int size, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Spectrum f;
  f.values.resize(size);
  for (double& v : f.values) v = uni(rng);
  return f;
}

}  // namespace

static void BM_q_cutoff(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FrequencyGrid grid = build_grid(0.05, m, m / 2);
  const auto kernel = InteractionKernel::acoustic(2);
  const Spectrum f = random_spectrum(grid.size(), 42);
  for (auto _ : state) {
    auto out = q_cutoff(f, kernel, grid);
    benchmark::DoNotOptimize(out.q.data());
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_q_cutoff)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_q_cutoff_bruteforce(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FrequencyGrid grid = build_grid(0.05, m, m / 2);
  const auto kernel = InteractionKernel::acoustic(2);
  const Spectrum f = random_spectrum(grid.size(), 42);
  for (auto _ : state) {
    auto out = q_cutoff_bruteforce(f, kernel, grid);
    benchmark::DoNotOptimize(out.q.data());
  }
}
BENCHMARK(BM_q_cutoff_bruteforce)->RangeMultiplier(2)->Range(64, 256);

static void BM_gain_loss_split(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FrequencyGrid grid = build_grid(0.05, m, m / 2);
  const auto kernel = InteractionKernel::regularized(2.0, 1.0);
  const Spectrum f = random_spectrum(grid.size(), 7);
  for (auto _ : state) {
    auto split = gain_loss_split(f, kernel, grid);
    benchmark::DoNotOptimize(split.gain.data());
  }
}
BENCHMARK(BM_gain_loss_split)->RangeMultiplier(2)->Range(64, 1024);

static void BM_euler_step(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FrequencyGrid grid = build_grid(0.05, m, m / 2);
  const auto kernel = InteractionKernel::acoustic(2);
  const Spectrum f = project_initial(
      grid, [](double) { return 1.0; }, 1.0, 2.0);
  const double dt = stable_dt(f, kernel, grid, 0.5);
  for (auto _ : state) {
    auto res = step(f, kernel, grid, dt, TimeMethod::Euler);
    benchmark::DoNotOptimize(res.spectrum.values.data());
  }
}
BENCHMARK(BM_euler_step)->RangeMultiplier(2)->Range(128, 512);

static void BM_weak_residual(benchmark::State& state) {
  const FrequencyGrid grid = build_grid(0.05, 200, 100);
  const auto kernel = InteractionKernel::acoustic(2);
  const Spectrum f0 = project_initial(
      grid, [](double) { return 1.0; }, 1.0, 2.0);
  SolverConfig sc;
  sc.t_end = 1.0;
  sc.auto_dt = false;
  sc.dt = 0.02;
  const Trajectory traj = integrate(f0, kernel, grid, sc);
  const TestFunction phi = TestFunction::bump(grid, 1.0, 2.0);
  for (auto _ : state) {
    auto series = weak_residual(traj, phi, kernel, grid);
    benchmark::DoNotOptimize(series.data());
  }
}
BENCHMARK(BM_weak_residual);

BENCHMARK_MAIN();
