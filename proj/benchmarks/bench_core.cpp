// Microbenchmarks for the hot paths: truncated extreme-weight folding, the
// alternating-sum pushforward, full weight-system expansion, and quotient-ring
// normalization. Run manually; not part of ctest.
#include <benchmark/benchmark.h>

#include "chowbso/chowbso.hpp"

using namespace chowbso;

namespace {

void BM_EulerProductTruncated(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(euler_coefficient_product(n));
}
BENCHMARK(BM_EulerProductTruncated)->DenseRange(6, 10);

void BM_PushforwardStaircase(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MultiPoly input = odd_staircase_monomial(n);
    for (auto _ : state) benchmark::DoNotOptimize(pushforward_flag(input, n).value);
}
BENCHMARK(BM_PushforwardStaircase)->DenseRange(3, 5);

void BM_TotalChernExtreme(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    WeightSystem ws = weights_dplus_extreme(n);
    for (auto _ : state) benchmark::DoNotOptimize(total_chern(ws));
}
BENCHMARK(BM_TotalChernExtreme)->DenseRange(3, 5);

void BM_PolyMulPacked(benchmark::State& state) {
    int nvars = 4;
    MultiPoly base = MultiPoly::constant(nvars, 1);
    for (int i = 0; i < nvars; ++i) base += MultiPoly::variable(nvars, i);
    MultiPoly a = poly_pow(base, 6);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_PolyMulPacked);

void BM_ChowNormalize(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ChowRing chow(n);
    int nv = 2 * n;
    int y = nv - 1;
    // (y + c3)^2 * (y + c_{2n-1})^3, assembled without normalization
    MultiPoly f = MultiPoly::variable(nv, y) + MultiPoly::variable(nv, 1);
    MultiPoly g = MultiPoly::variable(nv, y) + MultiPoly::variable(nv, nv - 3);
    MultiPoly raw = poly_pow(f, 2) * poly_pow(g, 3);
    for (auto _ : state) benchmark::DoNotOptimize(chow.normalize(raw));
}
BENCHMARK(BM_ChowNormalize)->DenseRange(3, 5);

} // namespace

BENCHMARK_MAIN();
