#include <benchmark/benchmark.h>

#include "gci/implication.hpp"

namespace {

void BM_BasisMatrix(benchmark::State& state) {
    const gci::CIModel model = gci::cyclic_model(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gci::basis_matrix(model));
}
BENCHMARK(BM_BasisMatrix)->DenseRange(4, 8, 1);

void BM_MinimalPrimes(benchmark::State& state) {
    const gci::BasisMatrix basis =
        gci::basis_matrix(gci::cyclic_model(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(gci::minimal_primes(basis));
}
BENCHMARK(BM_MinimalPrimes)->DenseRange(4, 8, 1);

void BM_ImpliedMarginals(benchmark::State& state) {
    const gci::CIModel model = gci::cyclic_model(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gci::implied_marginals(model, 10, 0));
}
BENCHMARK(BM_ImpliedMarginals)->DenseRange(4, 8, 1);

void BM_DropOneSuite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gci::drop_one_suite(n));
}
BENCHMARK(BM_DropOneSuite)->DenseRange(4, 8, 1);

void BM_CyclicHadamardPower(benchmark::State& state) {
    const gci::SymMatrix sigma = gci::counterexample_sigma(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gci::cyclic_hadamard_power(sigma));
}
BENCHMARK(BM_CyclicHadamardPower)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
