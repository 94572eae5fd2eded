#include <benchmark/benchmark.h>

#include <random>

#include "gl2d/experiment.hpp"

using namespace gl2d;

namespace {

ExperimentConfig grid_point(int64_t v1) {
  return parse_config("[field]\nu = 2\n[group]\nd = 2\n[rep]\ntheta = 1\ndprime = 2\nv1 = " + std::to_string(v1) +
                      "\n[engine]\nmax_iter = 8\n");
}

void BM_Echelon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto F = LocalField::make({3, 1, 1, 1, 24});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> dist(-40, 40);
  std::vector<Vec> gens(2 * n, Vec(n));
  for (auto& g : gens)
    for (auto& x : g) x = F->from_int(dist(rng));
  for (auto _ : state) benchmark::DoNotOptimize(Lattice::from_generators(F.get(), n, gens));
}
BENCHMARK(BM_Echelon)->Arg(4)->Arg(8)->Arg(16)->Arg(40);

void BM_ZigZagStep(benchmark::State& state) {
  const ExperimentConfig c = grid_point(state.range(0));
  LocalFieldSpec spec = c.field;
  spec.default_precision = c.precision;
  const auto F = LocalField::make(spec);
  const DiagramModel M = build_model(c, F);
  const Lattice seed = seed_lattice(M);
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_step(M, seed));
}
BENCHMARK(BM_ZigZagStep)->Arg(0)->Arg(-4)->Arg(-6)->Unit(benchmark::kMillisecond);

void BM_Check(benchmark::State& state) {
  const ExperimentConfig c = grid_point(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_check(c));
}
BENCHMARK(BM_Check)->Arg(-2)->Arg(-6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
