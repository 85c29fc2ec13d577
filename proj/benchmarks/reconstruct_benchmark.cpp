#include <benchmark/benchmark.h>

#include "recon/deck.hpp"
#include "recon/graph6.hpp"
#include "recon/profile.hpp"

namespace {

using namespace recon;

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

void BM_deck(benchmark::State& state) {
    Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(deck(g));
}
BENCHMARK(BM_deck)->Arg(8)->Arg(12);

void BM_reconstruct_s_profile(benchmark::State& state) {
    // the rediscovered pseudo-similar witness: the heaviest desk-scale case
    Graph g = parse_graph6("G@_qIS");
    Deck d = deck(g);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_s_profile(d, 2));
}
BENCHMARK(BM_reconstruct_s_profile);

void BM_reconstruct_t_profile(benchmark::State& state) {
    Graph g = cycle(8);
    Deck ed = edge_deck(g);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_t_profile(ed, 2));
}
BENCHMARK(BM_reconstruct_t_profile);

}  // namespace
