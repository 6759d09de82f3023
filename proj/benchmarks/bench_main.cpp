#include <benchmark/benchmark.h>

#include <memory>

#include "hypcy/coxeter/polytope.hpp"
#include "hypcy/davis/davis.hpp"
#include "hypcy/homology/homology.hpp"
#include "hypcy/homology/snf.hpp"
#include "hypcy/report/properties.hpp"
#include "hypcy/seq/models.hpp"

using namespace hypcy;

namespace {

void BM_GroupH4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_group(CoxeterDiagram::linear({5, 3, 3}), 20000).order());
}
BENCHMARK(BM_GroupH4)->Unit(benchmark::kMillisecond);

void BM_Lattice120Cell(benchmark::State& state) {
    auto g = std::make_shared<const ReflectionGroup>(generate_group(CoxeterDiagram::linear({5, 3, 3}), 20000));
    for (auto _ : state) benchmark::DoNotOptimize(build_120cell(g).fvector());
}
BENCHMARK(BM_Lattice120Cell)->Unit(benchmark::kMillisecond);

void BM_SnfRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource r(kDefaultSeed);
    IntMatrix a = r.int_matrix(n, n, 9, 60);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
}
BENCHMARK(BM_SnfRandom)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_DavisHomology(benchmark::State& state) {
    static const DavisModel m = build_davis_model();
    const CwComplex& M = m.quotient->cw();
    for (auto _ : state) benchmark::DoNotOptimize(homology(M));
}
BENCHMARK(BM_DavisHomology)->Unit(benchmark::kMillisecond);

void BM_CycloMultiply(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    RandomSource r(kDefaultSeed);
    CycloScalar x = r.cyclo(m), y = r.cyclo(m);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycloMultiply)->Arg(5)->Arg(12)->Arg(30);

void BM_SolveKnotThreefold(benchmark::State& state) {
    SequenceProblem p = knot_threefold_problem();
    for (auto _ : state) benchmark::DoNotOptimize(solve(p).status);
}
BENCHMARK(BM_SolveKnotThreefold)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
