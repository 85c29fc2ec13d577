#include <benchmark/benchmark.h>

#include <random>

#include "recon/canon.hpp"
#include "recon/counting.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph.hpp"

namespace {

using namespace recon;

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

void BM_canon_key(benchmark::State& state) {
    std::mt19937 rng(1234);
    std::vector<Graph> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_graph(static_cast<int>(state.range(0)), 0.4, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canon_key(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_canon_key)->Arg(6)->Arg(8)->Arg(10);

void BM_canon_key_cycle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    Graph cycle(n, edges);
    for (auto _ : state) benchmark::DoNotOptimize(canon_key(cycle));
}
BENCHMARK(BM_canon_key_cycle)->Arg(8)->Arg(12);

void BM_count_subgraphs_p4(benchmark::State& state) {
    std::mt19937 rng(99);
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<Graph> hosts;
    for (int i = 0; i < 64; ++i)
        hosts.push_back(random_graph(static_cast<int>(state.range(0)), 0.4, rng));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_subgraphs(p4, hosts[i++ % hosts.size()]));
}
BENCHMARK(BM_count_subgraphs_p4)->Arg(8)->Arg(10);

}  // namespace
