#include "slicecliff/mpoly.hpp"
#include "slicecliff/theorem.hpp"

#include <benchmark/benchmark.h>

using namespace slicecliff;

namespace {

SlicePoly sample(int m, int degree)
{
    std::mt19937_64 rng(7);
    return random_slice_poly(AlgebraSignature(m), degree, rng);
}

}  // namespace

static void BM_MvMulDense(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    Multivector a = random_coefficient(AlgebraSignature(m), rng);
    Multivector b = random_coefficient(AlgebraSignature(m), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(mv_mul(a, b));
}
BENCHMARK(BM_MvMulDense)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

static void BM_FrakFStem(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    SlicePoly p = sample(m, degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(frak_F(p, 1));
    state.SetLabel("m=" + std::to_string(m) + " deg=" + std::to_string(degree));
}
BENCHMARK(BM_FrakFStem)->Args({5, 6})->Args({9, 10})->Args({9, 20});

static void BM_OracleDiracLaplacian(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    SlicePoly p = sample(m, degree);
    for (auto _ : state) {
        MultiPoly f = expand_slice_poly(p);
        benchmark::DoNotOptimize(dirac_apply(laplacian_apply(f, 1), DiracConvention::Half));
    }
}
BENCHMARK(BM_OracleDiracLaplacian)->Args({3, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_VerifyMainTheorem(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_main_theorem(9, 3, 10, 5, 42));
}
BENCHMARK(BM_VerifyMainTheorem)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
