#include <benchmark/benchmark.h>

#include "cclab/apps.hpp"
#include "cclab/bounds.hpp"
#include "cclab/config.hpp"
#include "cclab/weil.hpp"

using namespace cclab;

namespace {

const char* kGroups[] = {"SL(2,5)", "Sp(4,2)", "SO+(4,3)", "Sp(4,3)"};

void BM_Enumerate(benchmark::State& st) {
    GroupSpec s = parse_group_spec(kGroups[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate(s));
    st.SetLabel(kGroups[st.range(0)]);
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Classes(benchmark::State& st) {
    auto G = enumerate(parse_group_spec(kGroups[st.range(0)]));
    for (auto _ : st) benchmark::DoNotOptimize(compute_classes(G));
    st.SetLabel(kGroups[st.range(0)]);
}
BENCHMARK(BM_Classes)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& st) {
    auto G = enumerate(parse_group_spec(kGroups[st.range(0)]));
    for (auto _ : st) {
        // fresh classes each round so the class-multiplication cache is cold
        auto cls = compute_classes(G);
        benchmark::DoNotOptimize(build_table(cls));
    }
    st.SetLabel(kGroups[st.range(0)]);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_WeilOperator(benchmark::State& st) {
    auto G = enumerate(parse_group_spec("Sp(4,3)"));
    WeilModel M(G->field_ptr(), 2, false);
    int g = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(M.op(G->element(g)));
        g = (g + 97) % G->order();
    }
}
BENCHMARK(BM_WeilOperator)->Unit(benchmark::kMicrosecond);

void BM_DeltaSolver(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(delta_solver(BigRational(99, 100)));
}
BENCHMARK(BM_DeltaSolver)->Unit(benchmark::kMillisecond);

void BM_ProductOneCount(benchmark::State& st) {
    auto t = build_table(compute_classes(enumerate(parse_group_spec("Sp(4,3)"))));
    for (auto _ : st) benchmark::DoNotOptimize(product_one_count(*t, {5, 9, 17}));
}
BENCHMARK(BM_ProductOneCount)->Unit(benchmark::kMicrosecond);

void BM_Walk(benchmark::State& st) {
    auto t = build_table(compute_classes(enumerate(parse_group_spec("SL(2,5)"))));
    for (auto _ : st) benchmark::DoNotOptimize(mixing_bounds(*t, 3, 8));
}
BENCHMARK(BM_Walk)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
