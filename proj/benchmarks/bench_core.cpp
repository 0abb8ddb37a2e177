#include <benchmark/benchmark.h>

#include "bentsmith/expr_tree.hpp"
#include "bentsmith/fitness.hpp"
#include "bentsmith/oracle.hpp"
#include "bentsmith/spectral.hpp"
#include "bentsmith/tree_variation.hpp"

using namespace bentsmith;

namespace {

TruthTable random_table(int n, RandomStream& rng)
{
    TruthTable tt(n);
    for (auto& w : tt.words()) w = rng();
    tt.normalize();
    return tt;
}

void BM_WhtFast(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    RandomStream rng(1);
    const auto tt = random_table(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(wht_fast(tt));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_WhtFast)->DenseRange(6, 16, 2);

void BM_WhtDirect(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    RandomStream rng(1);
    const auto tt = random_table(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::wht_direct(tt));
}
BENCHMARK(BM_WhtDirect)->DenseRange(4, 10, 2);

void BM_Fit2(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    RandomStream rng(2);
    const auto tt = random_table(n, rng);
    const Objective obj(ObjectiveKind::SelfDualFit2, n);
    for (auto _ : state) benchmark::DoNotOptimize(obj.evaluate(tt));
}
BENCHMARK(BM_Fit2)->DenseRange(6, 16, 2);

void BM_TreeEval(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    RandomStream rng(3);
    const auto terms = TerminalSet::direct(n);
    const auto policy = DepthPolicy::for_vars(n);
    const auto tree = full_tree(terms, policy.max_depth, rng);
    TreeEvaluator eval(n);
    for (auto _ : state) benchmark::DoNotOptimize(eval(tree));
    state.counters["nodes"] = static_cast<double>(tree.size());
}
BENCHMARK(BM_TreeEval)->DenseRange(6, 16, 2);

void BM_TreeCrossover(benchmark::State& state)
{
    const auto kind = kTreeCrossovers[static_cast<std::size_t>(state.range(0))];
    RandomStream rng(4);
    const auto terms = TerminalSet::direct(8);
    const auto policy = DepthPolicy::for_vars(8);
    const auto a = ramped_tree(terms, policy, rng);
    const auto b = ramped_tree(terms, policy, rng);
    for (auto _ : state) benchmark::DoNotOptimize(cx_tree(kind, a, b, policy, rng));
}
BENCHMARK(BM_TreeCrossover)->DenseRange(0, 4);

}  // namespace
BENCHMARK_MAIN();
