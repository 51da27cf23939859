#include <benchmark/benchmark.h>

#include "ucomp/brute_oracle.hpp"
#include "ucomp/coherent_comparator.hpp"
#include "ucomp/finite_comparator.hpp"

using namespace ucomp;

static void BM_SuccessProbPure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = EnsembleSpec::create(n, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(success_prob_pure(OverlapSquared(0.3), spec));
  }
}
BENCHMARK(BM_SuccessProbPure)->Arg(2)->Arg(16)->Arg(64);

static void BM_PureComparatorEval(benchmark::State& state) {
  const PureComparator p(32, 32);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p(x));
    x = x < 1.0 ? x + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_PureComparatorEval);

static void BM_AvgSuccessExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avg_success_exact(EnsembleSpec::create(k, k, 8)));
  }
}
BENCHMARK(BM_AvgSuccessExact)->Arg(4)->Arg(60);

static void BM_PermutationSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(1);
  const auto a = haar_random_state(3, rng);
  const auto b = haar_random_state(3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sym_overlap_permutation_sum(a, b, n / 2, n - n / 2));
  }
}
BENCHMARK(BM_PermutationSum)->DenseRange(2, 8, 2);

static void BM_SymProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sym_projector_matrix(2, n));
}
BENCHMARK(BM_SymProjector)->DenseRange(2, 8, 2);

static void BM_Quadrature(benchmark::State& state) {
  const int pts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherent_failure_quadrature({0, 0}, {1, 1}, 2, 3, 8.0, pts));
  }
}
BENCHMARK(BM_Quadrature)->Arg(51)->Arg(201);

static void BM_ComparatorNetwork(benchmark::State& state) {
  const auto pair = CoherentPair::create({0.5, -0.2}, {1.0, 0.3}, 10, 10);
  for (auto _ : state) benchmark::DoNotOptimize(comparator_network(pair));
}
BENCHMARK(BM_ComparatorNetwork);

static void BM_MonteCarloAverage(benchmark::State& state) {
  const MonteCarloConfig cfg{42, 10000, static_cast<std::uint32_t>(state.range(0))};
  const auto spec = EnsembleSpec::create(2, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mc_average_success(spec, cfg));
}
BENCHMARK(BM_MonteCarloAverage)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
