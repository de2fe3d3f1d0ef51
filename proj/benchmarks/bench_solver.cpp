#include <benchmark/benchmark.h>

#include "dchain/solver.hpp"

namespace {

void BM_ChiConvex(benchmark::State& state) {
    const auto g = dchain::build_graph(dchain::gen_convex(static_cast<std::size_t>(state.range(0))));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = dchain::chromatic_number_exact(g);
        nodes = r.nodes;
        benchmark::DoNotOptimize(r.chi);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ChiConvex)->DenseRange(4, 11)->Unit(benchmark::kMicrosecond);

void BM_ChiDoubleChain(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto l = static_cast<std::size_t>(state.range(1));
    const auto g = dchain::build_graph(dchain::gen_double_chain(k, l));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = dchain::chromatic_number_exact(g);
        nodes = r.nodes;
        benchmark::DoNotOptimize(r.chi);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ChiDoubleChain)
    ->Args({1, 3})
    ->Args({2, 4})
    ->Args({3, 5})
    ->Args({4, 5})
    ->Args({3, 6})
    ->Args({2, 7})
    ->Args({4, 6})
    ->Unit(benchmark::kMicrosecond);

void BM_DsaturConvex(benchmark::State& state) {
    const auto g = dchain::build_graph(dchain::gen_convex(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(dchain::dsatur_upper(g));
}
BENCHMARK(BM_DsaturConvex)->Arg(8)->Arg(16)->Arg(32);

void BM_CliqueConvex(benchmark::State& state) {
    const auto g = dchain::build_graph(dchain::gen_convex(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(dchain::clique_lower(g));
}
BENCHMARK(BM_CliqueConvex)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateConvex(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = dchain::build_graph(dchain::gen_convex(n));
    const auto chi = dchain::chromatic_number_exact(g).chi;
    for (auto _ : state) {
        auto s = dchain::enumerate_optimal_colorings(g, chi, [](const dchain::Coloring&) { return true; });
        benchmark::DoNotOptimize(s.count);
    }
}
BENCHMARK(BM_EnumerateConvex)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
