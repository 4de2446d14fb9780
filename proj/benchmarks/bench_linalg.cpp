#include <benchmark/benchmark.h>

#include "gci/intlinalg.hpp"
#include "gci/linalg.hpp"
#include "gci/sampling.hpp"

namespace {

gci::RatMatrix random_square(gci::Sampler& s, int n) {
    gci::RatMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = gci::rational(s.next_int(-9, 9), s.next_int(1, 7));
    return m;
}

void BM_Det(benchmark::State& state) {
    gci::Sampler s(1);
    const gci::RatMatrix m = random_square(s, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gci::det(m));
}
BENCHMARK(BM_Det)->DenseRange(4, 12, 2);

void BM_Rank(benchmark::State& state) {
    gci::Sampler s(2);
    const int n = static_cast<int>(state.range(0));
    const gci::RatMatrix m = random_square(s, n) * random_square(s, n);
    for (auto _ : state) benchmark::DoNotOptimize(gci::rank(m));
}
BENCHMARK(BM_Rank)->DenseRange(4, 12, 2);

void BM_SylvesterPD(benchmark::State& state) {
    gci::Sampler s(3);
    const gci::SymMatrix sigma = s.random_pd(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gci::is_positive_definite(sigma));
}
BENCHMARK(BM_SylvesterPD)->DenseRange(4, 12, 2);

void BM_SmithNormalForm(benchmark::State& state) {
    gci::Sampler s(4);
    const int n = static_cast<int>(state.range(0));
    gci::IntMatrix m(n, 3 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < 3 * n; ++c) m(r, c) = s.next_int(-2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(gci::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 8, 1);

}  // namespace

BENCHMARK_MAIN();
