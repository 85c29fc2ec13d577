#include <doctest.h>

#include "oracle.hpp"
#include "recon/counting.hpp"
#include "recon/enumerate.hpp"
#include "recon/identities.hpp"

using namespace recon;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

const Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
const Graph k2(2, {{0, 1}});
const Graph p3 = path(3);
const Graph k3 = complete(3);

}  // namespace

TEST_CASE("plain counts") {
    CHECK(count_subgraphs(k2, k3) == 3);
    CHECK(count_induced(k2, k3) == 3);
    CHECK(count_subgraphs(p3, cycle(4)) == 4);
    CHECK(count_induced(p3, cycle(4)) == 4);
    CHECK(count_subgraphs(p3, k3) == 3);
    CHECK(count_induced(p3, k3) == 0);
    CHECK(count_subgraphs(complete(4), k3) == 0);  // pattern bigger than host
}

TEST_CASE("counts at a vertex") {
    for (int v = 0; v < 3; ++v) CHECK(count_at_vertex(k2, k3, v, CountMode::subgraph) == 2);
    for (int v = 0; v < 4; ++v) CHECK(count_at_vertex(p3, cycle(4), v, CountMode::subgraph) == 3);
    CHECK(count_at_vertex(k3, paw, 3, CountMode::induced) == 0);  // pendant
    CHECK(count_at_vertex(k3, paw, 2, CountMode::induced) == 1);  // degree-3 vertex
}

TEST_CASE("root-coincident counts") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    for (int v = 0; v < 4; ++v)
        CHECK(count_root_coincident(VertexRootedGraph(star, 0), VertexRootedGraph(complete(4), v),
                                    CountMode::subgraph) == 1);
    for (int v = 0; v < 4; ++v)
        CHECK(count_root_coincident(VertexRootedGraph(paw, 2), VertexRootedGraph(complete(4), v),
                                    CountMode::subgraph) == 3);
    Graph p4 = path(4);
    CHECK(count_root_coincident(VertexRootedGraph(p4, 0), VertexRootedGraph(p4, 0),
                                CountMode::induced) == 1);
    CHECK(count_root_coincident(VertexRootedGraph(p4, 0), VertexRootedGraph(p4, 1),
                                CountMode::induced) == 0);
}

TEST_CASE("orbit decomposition") {
    // paw against any rooted host: three entries summing to s(paw, G^v)
    Graph host = complete(5);
    auto parts = orbit_decompose_count(paw, VertexRootedGraph(host, 0), CountMode::subgraph);
    CHECK(parts.size() == 3);
    long long sum = 0;
    for (auto [rep, value] : parts) sum += value;
    CHECK(sum == count_at_vertex(paw, host, 0, CountMode::subgraph));

    auto single = orbit_decompose_count(k3, VertexRootedGraph(complete(4), 1), CountMode::subgraph);
    CHECK(single.size() == 1);
    CHECK(single.begin()->second == count_at_vertex(k3, complete(4), 1, CountMode::subgraph));

    // P3 in C4 through any v, classified by which P3 vertex hits v
    auto split = orbit_decompose_count(p3, VertexRootedGraph(cycle(4), 0), CountMode::subgraph);
    REQUIRE(split.size() == 2);
    CHECK(split.at(0) == oracle::count_rooted(VertexRootedGraph(p3, 0),
                                              VertexRootedGraph(cycle(4), 0),
                                              CountMode::subgraph));
    CHECK(split.at(1) == oracle::count_rooted(VertexRootedGraph(p3, 1),
                                              VertexRootedGraph(cycle(4), 0),
                                              CountMode::subgraph));
    CHECK(split.at(0) == 2);
    CHECK(split.at(1) == 1);
}

TEST_CASE("rooted totals") {
    CHECK(count_rooted_total(VertexRootedGraph(p3, 0), path(4)) == 4);
    CHECK(count_rooted_total(VertexRootedGraph(k3, 0), complete(4)) == 12);
    for (const Graph& g : {paw, cycle(5), path(6)})
        CHECK(count_rooted_total(VertexRootedGraph(Graph(1), 0), g) == g.vertex_count());
}

TEST_CASE("rooted total equals the sum of root-coincident counts") {
    for (const auto& entry : rooted_catalog()) {
        Graph host = cycle(6);
        long long total = count_rooted_total(entry.rooted, host);
        long long sum = 0;
        for (int v = 0; v < host.vertex_count(); ++v)
            sum += count_root_coincident(entry.rooted, VertexRootedGraph(host, v),
                                         CountMode::subgraph);
        CHECK(total == sum);
    }
}

TEST_CASE("oracle agreement for catalog patterns in small hosts") {
    auto hosts = enumerate_graphs(5, false);
    for (const auto& entry : rooted_catalog()) {
        const Graph& f = entry.rooted.graph;
        for (const Graph& g : hosts.graphs)
            for (CountMode mode : {CountMode::subgraph, CountMode::induced}) {
                CHECK(count_copies(f, g, mode) == oracle::count(f, g, mode));
                CHECK(count_at_vertex(f, g, 0, mode) == oracle::count_through(f, g, 0, mode));
                CHECK(count_root_coincident(entry.rooted, VertexRootedGraph(g, 0), mode) ==
                      oracle::count_rooted(entry.rooted, VertexRootedGraph(g, 0), mode));
            }
    }
}

TEST_CASE("edge-rooted counts agree with the oracle") {
    auto hosts = enumerate_graphs(5, true);
    EdgeRootedGraph pattern(p3, {0, 1});
    EdgeRootedGraph k2_rooted(k2, {0, 1});
    for (const Graph& g : hosts.graphs)
        for (auto e : g.edges()) {
            EdgeRootedGraph host(g, e);
            for (CountMode mode : {CountMode::subgraph, CountMode::induced}) {
                CHECK(count_root_coincident(pattern, host, mode) ==
                      oracle::count_edge_rooted(pattern, host, mode));
                CHECK(count_root_coincident(k2_rooted, host, mode) == 1);
            }
        }
}

TEST_CASE("induced counts never exceed subgraph counts") {
    auto hosts = enumerate_graphs(5, false);
    for (const auto& entry : rooted_catalog())
        for (const Graph& g : hosts.graphs)
            CHECK(count_copies(entry.rooted.graph, g, CountMode::induced) <=
                  count_copies(entry.rooted.graph, g, CountMode::subgraph));
}

TEST_CASE("all patterns on up to 4 vertices agree with the oracle, disconnected included") {
    std::vector<Graph> patterns;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& f : enumerate_graphs(n, false).graphs) patterns.push_back(f);
    CHECK(patterns.size() == 18);
    auto hosts = enumerate_graphs(5, false);
    for (const Graph& f : patterns)
        for (const Graph& g : hosts.graphs)
            for (CountMode mode : {CountMode::subgraph, CountMode::induced}) {
                CHECK(count_copies(f, g, mode) == oracle::count(f, g, mode));
                CHECK(count_at_vertex(f, g, 2, mode) == oracle::count_through(f, g, 2, mode));
                VertexRootedGraph rooted(f, 0);
                CHECK(count_root_coincident(rooted, VertexRootedGraph(g, 2), mode) ==
                      oracle::count_rooted(rooted, VertexRootedGraph(g, 2), mode));
            }
}

TEST_CASE("a pattern as large as the host is allowed") {
    // needed for the maximal candidates of the profile recursion
    Graph g = cycle(5);
    CHECK(count_subgraphs(g, g) == 1);
    CHECK(count_root_coincident(VertexRootedGraph(g, 0), VertexRootedGraph(g, 3),
                                CountMode::subgraph) == 1);
}
