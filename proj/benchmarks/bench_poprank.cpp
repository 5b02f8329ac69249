#include <benchmark/benchmark.h>

#include "poprank/core.hpp"
#include "poprank/generators.hpp"
#include "poprank/kemeny.hpp"
#include "poprank/majority.hpp"
#include "poprank/popularity.hpp"

using namespace poprank;

static void BM_KendallDistance(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const VotingInstance inst = random_instance(2, m, Seed{42});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kendall_distance(inst.voter(1), inst.voter(2)));
    }
}
BENCHMARK(BM_KendallDistance)->Arg(16)->Arg(64)->Arg(256);

static void BM_VerifyPopularFig1(benchmark::State& state) {
    const VotingInstance inst = fig1_instance();
    const Ranking pi({1, 2, 3, 4, 5, 6, 7, 8, 9});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_popular(inst, pi, Mode::Absolute));
    }
}
BENCHMARK(BM_VerifyPopularFig1);

static void BM_KemenyConsensus(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const VotingInstance inst = random_instance(7, m, Seed{7});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kemeny_consensus(inst));
    }
}
BENCHMARK(BM_KemenyConsensus)->Arg(6)->Arg(8)->Arg(10);

static void BM_TopologicalSorts(benchmark::State& state) {
    const VotingInstance inst = fig1_instance();
    const MajorityGraph g = build_majority_graph(inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(topological_sorts(g));
    }
}
BENCHMARK(BM_TopologicalSorts);

BENCHMARK_MAIN();
