#include <benchmark/benchmark.h>

#include "redvar/admissible.hpp"
#include "redvar/algebra.hpp"
#include "redvar/repthy.hpp"
#include "redvar/vinberg.hpp"

using namespace redvar;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_TensorDecompose(benchmark::State& state) {
    auto rd = build_root_datum("B3");
    Weight l = ivec({1, 1, 1}), m = ivec({1, 1, 0});
    weight_multiplicities(rd, m);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(rd, l, m, mode(state)));
}
BENCHMARK(BM_TensorDecompose)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_Associativity(benchmark::State& state) {
    auto G = make_group("A2");
    auto ctx = make_context(G, Cone::full(2), regular_grading(G->rd()), 6);
    for (auto _ : state) benchmark::DoNotOptimize(associativity_check(*ctx, mode(state)));
}
BENCHMARK(BM_Associativity)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_OverlappingTranslate(benchmark::State& state) {
    GroupData G(build_root_datum("B3"));
    // the chamber has no overlapping translate, so the whole group is scanned
    for (auto _ : state) benchmark::DoNotOptimize(overlapping_translate(G, G.chamber(), mode(state)));
}
BENCHMARK(BM_OverlappingTranslate)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
