#include <benchmark/benchmark.h>

#include "definetti/lr_rule.hpp"
#include "definetti/tensor_oracle.hpp"
#include "definetti/werner.hpp"

using namespace definetti;

namespace {

void bm_schur_eval(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Spectrum x = parse_spectrum("1/2,1/3,1/12,1/12");
  auto shapes = enumerate_partitions(k, 4);
  for (auto _ : state)
    for (const Partition& mu : shapes) benchmark::DoNotOptimize(schur_eval(mu, x));
}
BENCHMARK(bm_schur_eval)->Arg(4)->Arg(8)->Arg(12);

void bm_shifted_schur(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::vector<long> la = {9, 6, 4, 1};
  auto shapes = enumerate_partitions(k, 4);
  for (auto _ : state)
    for (const Partition& mu : shapes) benchmark::DoNotOptimize(shifted_schur_eval(mu, la));
}
BENCHMARK(bm_shifted_schur)->Arg(4)->Arg(8);

void bm_ptrace_shifted(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition la({n - 2, 1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(partial_trace_coeffs_shifted(la, n, 4, 3));
}
BENCHMARK(bm_ptrace_shifted)->Arg(8)->Arg(16)->Arg(32);

void bm_ptrace_lr(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition la({n - 2, 1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(partial_trace_coeffs_lr(la, n, 4, 3));
}
BENCHMARK(bm_ptrace_lr)->Arg(8)->Arg(16)->Arg(32);

void bm_lr_coefficient(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition la({n, n - 1, n - 2, 1});
  Partition mu({n - 1, n - 2, 1});
  Partition nu({n - 1, 1});  // |nu| = |la| - |mu|
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(la, mu, nu));
}
BENCHMARK(bm_lr_coefficient)->Arg(4)->Arg(6)->Arg(8);

void bm_young_projector(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition la({n - 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(young_projector(la, n, 2));
}
BENCHMARK(bm_young_projector)->Arg(4)->Arg(5)->Arg(6);

void bm_grid_minimum(benchmark::State& state) {
  int res = static_cast<int>(state.range(0));
  WernerState target(2, 3, {frac(1, 3), frac(2, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_grid(target, res));
}
BENCHMARK(bm_grid_minimum)->Arg(30)->Arg(60)->Arg(120);

void bm_mixture_gap(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Eigen::VectorXcd psi = random_symmetric_state(n, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_mixture_gap(psi, n, 2, 2));
}
BENCHMARK(bm_mixture_gap)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
