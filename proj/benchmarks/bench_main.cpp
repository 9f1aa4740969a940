#include "lemni/arc_algebra.hpp"
#include "lemni/division_radicals.hpp"
#include "lemni/numerics.hpp"
#include "lemni/recipes.hpp"

#include <benchmark/benchmark.h>

using namespace lemni;

static void BM_Omega(benchmark::State& state) {
    PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(omega(ctx));
}
BENCHMARK(BM_Omega)->Arg(30)->Arg(60)->Arg(120);

static void BM_ArcLength(benchmark::State& state) {
    PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    PrecisionScope scope(ctx);
    Radius r(Real(7) / 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(arc_length(r, ctx));
}
BENCHMARK(BM_ArcLength)->Arg(30)->Arg(60);

static void BM_LemniscateSine(benchmark::State& state) {
    PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    PrecisionScope scope(ctx);
    ArcParam s(omega(ctx) / 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(lemniscate_sine(s, ctx));
}
BENCHMARK(BM_LemniscateSine)->Arg(30)->Arg(60);

static void BM_AddArcs(benchmark::State& state) {
    PrecisionContext ctx(30);
    PrecisionScope scope(ctx);
    Radius r(Real("0.61")), u(Real("0.34"));
    for (auto _ : state)
        benchmark::DoNotOptimize(add_arcs(r, u, ctx));
}
BENCHMARK(BM_AddArcs);

static void BM_AbelRadicalRoot(benchmark::State& state) {
    PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(abel_radical_root(ctx));
}
BENCHMARK(BM_AbelRadicalRoot)->Arg(40)->Arg(80);

static void BM_SeventeenU(benchmark::State& state) {
    PrecisionContext ctx(30);
    for (auto _ : state) {
        Scene scene(ctx);
        Frame f = Frame::create(scene);
        benchmark::DoNotOptimize(recipe_seventeen_u(scene, f));
    }
}
BENCHMARK(BM_SeventeenU);

static void BM_SeventeenAll(benchmark::State& state) {
    PrecisionContext ctx(30);
    for (auto _ : state) {
        Scene scene(ctx);
        Frame f = Frame::create(scene);
        benchmark::DoNotOptimize(recipe_seventeen_all(scene, f));
    }
}
BENCHMARK(BM_SeventeenAll);

BENCHMARK_MAIN();
