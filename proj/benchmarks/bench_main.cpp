#include <benchmark/benchmark.h>

#include <random>

#include "fjf/generators.hpp"
#include "fjf/matrix.hpp"
#include "fjf/operators.hpp"

using namespace fjf;

namespace {

void BM_QSeriesMul(benchmark::State& state) {
    Rat prec(state.range(0));
    auto a = eisenstein(4, prec);
    auto b = eisenstein(6, prec);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QSeriesMul)->Range(16, 256)->Complexity();

void BM_BivariateMul(benchmark::State& state) {
    Rat prec(state.range(0));
    auto a = phi01(prec);
    auto b = phiM21(prec);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BivariateMul)->Range(8, 64)->Complexity();

void BM_ExactKernel(benchmark::State& state) {
    long n = state.range(0);
    std::mt19937 rng(99);
    ExactMatrix mat(n, n + n / 2);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n + n / 2; ++j) {
            long v = static_cast<long>(rng() % 9) - 4;
            if (v != 0) mat.set(i, j, Rat(v));
        }
    for (auto _ : state) benchmark::DoNotOptimize(exactKernel(mat));
    state.SetComplexityN(n);
}
BENCHMARK(BM_ExactKernel)->Range(8, 64)->Complexity();

void BM_JacobiBasis(benchmark::State& state) {
    long m = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            jacobiBasis(10, m, SpaceKind::cusp(), jacobiSufficientPrec(10, m)));
}
BENCHMARK(BM_JacobiBasis)->DenseRange(1, 4);

void BM_GritsenkoLift(benchmark::State& state) {
    long d = state.range(0);
    auto phi = jacobiBasis(10, 1, SpaceKind::cusp(),
                           std::max(jacobiSufficientPrec(10, 1), d * (d + 1) + 1))
                   .front();
    for (auto _ : state) benchmark::DoNotOptimize(gritsenkoFJ(phi, d, d + 2));
}
BENCHMARK(BM_GritsenkoLift)->DenseRange(2, 6);

}  // namespace

BENCHMARK_MAIN();
