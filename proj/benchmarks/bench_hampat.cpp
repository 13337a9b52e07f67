#include <benchmark/benchmark.h>

#include <numeric>

#include "hampat/absorber.hpp"
#include "hampat/embed.hpp"
#include "hampat/instances.hpp"
#include "hampat/matching.hpp"
#include "hampat/oracle.hpp"
#include "hampat/path_cover.hpp"
#include "hampat/pipeline.hpp"
#include "hampat/random.hpp"

using namespace hampat;

namespace {

BipartiteGraph dense_bipartite(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    BipartiteGraph g(n, n);
    for (std::uint32_t l = 0; l < n; ++l)
        for (std::uint32_t r = 0; r < n; ++r)
            if (uniform_unit(rng) < 0.6) g.add_edge(l, r);
    return g;
}

}  // namespace

static void BM_PerfectMatching(benchmark::State& state) {
    const auto g = dense_bipartite(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(perfect_matching(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PerfectMatching)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_PathBuilder(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0)), k = 8;
    const auto h = reduce_pattern_to_identity(gen_random_dirac(n, 4, 0.2, 3), gen_pattern(PatternKind::random, n, 4, 3));
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    const auto parts = random_balanced_partition(vs, k, h, std::nullopt, 3, 1).partition.parts;
    std::vector<std::vector<Colour>> patterns(3 * n / (4 * k), std::vector<Colour>(k - 1));
    for (std::size_t i = 0; i < patterns.size(); ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) patterns[i][j] = static_cast<Colour>(i * (k - 1) + j);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(path_builder(h, parts, patterns, ++seed, {AbortRule::hall, false}));
}
BENCHMARK(BM_PathBuilder)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_OracleCounterexample(benchmark::State& state) {
    const Instance cx = gen_counterexample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_solve(cx.graphs, *cx.pattern));
}
BENCHMARK(BM_OracleCounterexample)->DenseRange(6, 12, 2);

static void BM_GadgetEmbed(benchmark::State& state) {
    const std::size_t ell = static_cast<std::size_t>(state.range(0));
    const std::size_t n = 400;
    const auto h = reduce_pattern_to_identity(gen_random_dirac(n, 2, 0.2, 5), gen_pattern(PatternKind::random, n, 2, 5));
    std::vector<Vertex> anchors(ell + 1);
    std::iota(anchors.begin(), anchors.end(), 0);
    for (auto _ : state) benchmark::DoNotOptimize(embed_gadget(h, 0, static_cast<Colour>(4 * ell + 1), anchors, VertexSet(n)));
}
BENCHMARK(BM_GadgetEmbed)->DenseRange(1, 8, 1);

static void BM_Solve(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto g = gen_random_dirac(n, 8, 0.2, 11);
    const auto chi = gen_pattern(PatternKind::random, n, 8, 11);
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, chi));
}
BENCHMARK(BM_Solve)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
