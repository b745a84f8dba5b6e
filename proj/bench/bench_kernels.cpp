#include "boardsat/oracle.hpp"
#include "boardsat/random_engine.hpp"

#include <map>

#include <benchmark/benchmark.h>

using namespace boardsat;

namespace {

const Formula& bench_formula(unsigned n)
{
    static std::map<unsigned, Formula> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, random_formula(n, 4 * n, WidthDistribution::fixed(3), 17)).first;
    return it->second;
}

void BM_BruteForceSerial(benchmark::State& state)
{
    const Instance inst = bench_formula(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_serial(inst));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_BruteForceParallel(benchmark::State& state)
{
    const Instance inst = bench_formula(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force(inst));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

template <bool Parallel>
void BM_PrefixBatch(benchmark::State& state)
{
    const unsigned p = static_cast<unsigned>(state.range(0));
    const unsigned n = p + 8;
    const Instance inst = ImplicitFormula(n, std::nullopt);
    NullSink sink;
    Word suffix = 0;
    for (auto _ : state) {
        const BatchResult r = Parallel ? test_prefix_batch_parallel(suffix, 8, p, inst, sink, nullptr)
                                       : test_prefix_batch_serial(suffix, 8, p, inst, sink, nullptr);
        benchmark::DoNotOptimize(r);
        suffix = (suffix + 1) & 0xff;
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << p));
}

} // namespace

BENCHMARK(BM_BruteForceSerial)->DenseRange(12, 20, 4);
BENCHMARK(BM_BruteForceParallel)->DenseRange(12, 20, 4);
BENCHMARK(BM_PrefixBatch<false>)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_PrefixBatch<true>)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
