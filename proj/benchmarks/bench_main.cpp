#include "hypercol/edge_coloring.hpp"
#include "hypercol/gadget.hpp"
#include "hypercol/reduction.hpp"
#include "hypercol/solvers.hpp"
#include "hypercol/structure.hpp"
#include "hypercol/verify.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hypercol;

namespace {

// Random 3-bounded hypergraph whose edges all meet {1..s}, so nu <= s.
Hypergraph hitting_instance(std::size_t n, std::size_t m, std::size_t s, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> core(1, static_cast<Vertex>(s));
    std::uniform_int_distribution<Vertex> any(1, static_cast<Vertex>(n));
    std::set<Edge> edges;
    for (std::size_t tries = 0; edges.size() < m && tries < 50 * m; ++tries) {
        Edge e{core(rng), any(rng), any(rng)};
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() >= 2)
            edges.insert(e);
    }
    return Hypergraph(n, {edges.begin(), edges.end()});
}

Hypergraph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Hypergraph(n, std::move(edges));
}

Hypergraph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= 5; ++i) {
        edges.push_back({i, static_cast<Vertex>(i % 5 + 1)});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, static_cast<Vertex>((i + 1) % 5 + 6)});
    }
    return Hypergraph(10, std::move(edges));
}

void BM_TwoColor3Bounded(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = static_cast<std::size_t>(state.range(1));
    const Hypergraph g = hitting_instance(n, 4 * n, s, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_2col_3bounded(g, s));
}
BENCHMARK(BM_TwoColor3Bounded)->Args({50, 2})->Args({200, 2})->Args({200, 3})->Unit(benchmark::kMicrosecond);

void BM_PrecolorExtension(benchmark::State& state)
{
    const auto r = static_cast<Color>(state.range(0));
    const std::size_t s = r - 1;
    const Hypergraph g = hitting_instance(14, 30, s, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(precolor_extend_bounded(g, r, 3, s, PartialColoring(14, r)));
}
BENCHMARK(BM_PrecolorExtension)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_MisraGries(benchmark::State& state)
{
    const Hypergraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(misra_gries_edge_color(g));
}
BENCHMARK(BM_MisraGries)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_BuildG1(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(build_g1());
}
BENCHMARK(BM_BuildG1)->Unit(benchmark::kMillisecond);

void BM_VerifyG1Dichotomy(benchmark::State& state)
{
    const Gadget g = build_g1();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_g1_dichotomy(g.hypergraph, g.certificate));
}
BENCHMARK(BM_VerifyG1Dichotomy)->Unit(benchmark::kMillisecond);

void BM_ReducePetersen(benchmark::State& state)
{
    const Hypergraph g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_3col_linear(g));
}
BENCHMARK(BM_ReducePetersen)->Unit(benchmark::kMillisecond);

void BM_IsLinear(benchmark::State& state)
{
    const Gadget g = build_g2();
    for (auto _ : state)
        benchmark::DoNotOptimize(is_linear(g.hypergraph));
}
BENCHMARK(BM_IsLinear)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
