#include <benchmark/benchmark.h>

#include <random>

#include "dampwave/bvdata.hpp"
#include "dampwave/simulation.hpp"
#include "dampwave/transition.hpp"

using namespace dampwave;

namespace {

Vec random_vector(int N) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Vec w(static_cast<std::size_t>(2 * N));
  for (auto& v : w) {
    v = uni(rng);
  }
  return w;
}

ProblemSpec telegrapher(double d) {
  ProblemSpec spec;
  spec.k = KProfile::constant(d);
  spec.initial = generate_bv_data(0, 16, -1.0, 1.0);
  return spec;
}

void BM_ApplyB(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Vec gamma = uniform_gamma(N, 0.5 / N);
  Vec w = random_vector(N);
  for (auto _ : state) {
    w = apply_B(gamma, w);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * 2 * N);
}
BENCHMARK(BM_ApplyB)->RangeMultiplier(4)->Range(64, 16384);

void BM_Step(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto method = state.range(1) == 0 ? StepMethod::explicit_linear : StepMethod::root_solve;
  Simulation sim(telegrapher(0.5), N, method);
  for (auto _ : state) {
    sim.step();
  }
  state.SetItemsProcessed(state.iterations() * N);
}
BENCHMARK(BM_Step)->ArgsProduct({{256, 1024, 4096}, {0, 1}});

void BM_RemainderApply(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const PermutationPower powers(N);
  const Vec w = random_vector(N);
  for (auto _ : state) {
    Vec r = remainder_R_apply(powers, 0.5, w);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_RemainderApply)->RangeMultiplier(4)->Range(16, 1024);

void BM_Snapshot(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Simulation sim(telegrapher(0.5), N);
  sim.advance_steps(N / 2);
  for (auto _ : state) {
    FieldSnapshot s = sim.snapshot();
    benchmark::DoNotOptimize(s.rho.data());
  }
}
BENCHMARK(BM_Snapshot)->Arg(1024)->Arg(8192);

}  // namespace

BENCHMARK_MAIN();
