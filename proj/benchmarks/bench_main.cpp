#include <benchmark/benchmark.h>

#include "leja/interp1d.hpp"
#include "leja/intertwine.hpp"
#include "leja/rleja.hpp"

using namespace leja;

namespace {

void BM_ExtendCanonical(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        DiskLejaSequence seq = DiskLejaSequence::canonical();
        seq.extend(len);
        benchmark::DoNotOptimize(seq.angles().data());
    }
}
BENCHMARK(BM_ExtendCanonical)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

void BM_ProjectDedup(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const RLejaSequence x =
            RLejaSequence::project_dedup(DiskLejaSequence::canonical(), count);
        benchmark::DoNotOptimize(x.values().data());
    }
}
BENCHMARK(BM_ProjectDedup)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_BarycentricWeights(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const NodeSet1D base = chebyshev_lobatto(d);
    const std::vector<double> nodes(base.nodes().begin(), base.nodes().end());
    for (auto _ : state) {
        NodeSet1D rebuilt{std::vector<double>(nodes)};
        benchmark::DoNotOptimize(rebuilt.bary_weights().data());
    }
}
BENCHMARK(BM_BarycentricWeights)->RangeMultiplier(4)->Range(16, 1024);

void BM_LebesgueLobatto(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const NodeSet1D nodes = chebyshev_lobatto(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lebesgue_constant(nodes, 64).value);
    }
}
BENCHMARK(BM_LebesgueLobatto)->RangeMultiplier(4)->Range(16, 256);

void BM_LebesgueSection(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), k);
    const NodeSet1D nodes = x.prefix_nodes(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lebesgue_constant(nodes, 64).value);
    }
}
BENCHMARK(BM_LebesgueSection)->RangeMultiplier(2)->Range(16, 512);

void BM_NdLebesgueScan(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), k + 1);
    const std::vector<double> axis(x.values().begin(), x.values().end());
    const IntertwinedGrid grid({axis, axis}, k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lebesgue_constant_nd(grid, 32).value);
    }
}
BENCHMARK(BM_NdLebesgueScan)->DenseRange(2, 8, 2);

void BM_NdFlipScan(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), k + 1);
    const std::vector<double> axis(x.values().begin(), x.values().end());
    const IntertwinedGrid grid({axis, axis}, k);
    const std::vector<double> p{0.3, -0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid.lebesgue_function(p));
    }
}
BENCHMARK(BM_NdFlipScan)->DenseRange(2, 10, 2);

} // namespace

BENCHMARK_MAIN();
