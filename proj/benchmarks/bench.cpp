#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "prodcol/product.hpp"
#include "prodcol/verify.hpp"

using namespace prodcol;

namespace {

Tree path_tree(int n) { return generate({.kind = TreeKind::Path, .n = n}); }

Tree random_tree(int n, std::uint64_t seed) {
    return generate({.kind = TreeKind::Random, .n = n, .seed = seed});
}

void BM_TreeFromEdges(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Tree t = random_tree(n, 7);
    std::vector<Edge> edges = t.edges;
    for (auto _ : state)
        benchmark::DoNotOptimize(tree_from_edges(edges));
}
BENCHMARK(BM_TreeFromEdges)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ColourTreeSquare(benchmark::State& state) {
    Tree t = random_tree(static_cast<int>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(colour_tree_square(t, 2));
}
BENCHMARK(BM_ColourTreeSquare)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ColourProductGrid(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    ProductInstance inst = make_instance({path_tree(side), path_tree(side)});
    for (auto _ : state)
        benchmark::DoNotOptimize(colour_product(inst));
}
BENCHMARK(BM_ColourProductGrid)->Arg(30)->Arg(100)->Arg(300);

void BM_WrapGrid(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    ProductColouring pc =
        colour_product(make_instance({path_tree(side), path_tree(side)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(wrap(pc));
}
BENCHMARK(BM_WrapGrid)->Arg(30)->Arg(100)->Arg(300);

void BM_SquareGrid(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    ExplicitGraph g = build_product_graph(
        make_instance({path_tree(side), path_tree(side)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(square(g));
}
BENCHMARK(BM_SquareGrid)->Arg(10)->Arg(30)->Arg(100);

void BM_ChiExactGridSquare(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    ProductInstance inst = make_instance({path_tree(side), path_tree(side)});
    ExplicitGraph sq = square(build_product_graph(inst));
    int hint = clique_certificate(inst).size;
    for (auto _ : state)
        benchmark::DoNotOptimize(chi_exact(sq, 512, hint));
}
BENCHMARK(BM_ChiExactGridSquare)->Arg(3)->Arg(5)->Arg(8);

void BM_CheckSpansCube(benchmark::State& state) {
    int side = static_cast<int>(state.range(0));
    ProductInstance inst =
        make_instance({path_tree(side), path_tree(side), path_tree(side)});
    ProductColouring pc = colour_product(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_spans(inst, pc.dense));
}
BENCHMARK(BM_CheckSpansCube)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
