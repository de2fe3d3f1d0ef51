#include <benchmark/benchmark.h>

#include "dchain/disjointness.hpp"
#include "dchain/geometry.hpp"

namespace {

void BM_BuildGraphConvex(benchmark::State& state) {
    const auto ps = dchain::gen_convex(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dchain::build_graph(ps));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraphConvex)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_BuildGraphDoubleChain(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto ps = dchain::gen_double_chain(k, k);
    for (auto _ : state) benchmark::DoNotOptimize(dchain::build_graph(ps));
}
BENCHMARK(BM_BuildGraphDoubleChain)->DenseRange(4, 24, 4);

void BM_GenDoubleChain(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dchain::gen_double_chain(k, k));
}
BENCHMARK(BM_GenDoubleChain)->Arg(5)->Arg(10)->Arg(25)->Arg(50);

void BM_ValidateDoubleChain(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto ps = dchain::gen_double_chain(k, k);
    for (auto _ : state) benchmark::DoNotOptimize(dchain::validate_double_chain(ps));
}
BENCHMARK(BM_ValidateDoubleChain)->Arg(5)->Arg(10)->Arg(25)->Arg(50);

}  // namespace
