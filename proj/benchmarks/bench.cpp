#include <benchmark/benchmark.h>

#include "berge/front.hpp"
#include "berge/io.hpp"
#include "berge/modmath.hpp"
#include "berge/verify.hpp"

using namespace berge;

static void BM_CongruenceResidual(benchmark::State& state) {
    Residue a(11, 16);
    for (auto _ : state) {
        auto r = verify::congruence_residual(16, a, 7);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CongruenceResidual);

static void BM_ClassifyTypeIIIV(benchmark::State& state) {
    families::TypeIIIVParams prm{families::Family::III, +1, -1, 9, 4, -5};
    for (auto _ : state) {
        auto report = verify::classify(families::type_III_V(prm));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_ClassifyTypeIIIV);

static void BM_RootsVsReps(benchmark::State& state) {
    const i64 p = state.range(0);
    for (auto _ : state) {
        auto roots = modmath::roots_x2_x_1(p);
        auto reps = modmath::primitive_reps_eisenstein(p);
        benchmark::DoNotOptimize(roots);
        benchmark::DoNotOptimize(reps);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RootsVsReps)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

static void BM_FibPairNormalize(benchmark::State& state) {
    for (auto _ : state) {
        auto r = modmath::fib_pair_normalize(34, 89);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FibPairNormalize);

static void BM_TorusDualFront(benchmark::State& state) {
    for (auto _ : state) {
        auto td = front::torus_dual_front(7, 349);
        benchmark::DoNotOptimize(td);
    }
}
BENCHMARK(BM_TorusDualFront);

static void BM_SweepTypeIX(benchmark::State& state) {
    verify::SweepSpec spec;
    spec.family = verify::Family::IX;
    spec.j = {-state.range(0), state.range(0)};
    for (auto _ : state) {
        auto sum = verify::sweep(spec, 1, nullptr);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_SweepTypeIX)->Arg(100)->Arg(500);

BENCHMARK_MAIN();
