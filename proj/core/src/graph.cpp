#include "recon/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace recon {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int checked_order(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > Graph::max_order)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " exceeds supported maximum " +
                                    std::to_string(Graph::max_order));
    return n;
}

}  // namespace

Graph::Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_), 0) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u == v)
            throw std::invalid_argument("edge " + std::to_string(i) + " (" + std::to_string(u) +
                                        "," + std::to_string(v) + "): self-loop");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge " + std::to_string(i) + " (" + std::to_string(u) +
                                        "," + std::to_string(v) + "): endpoint out of range for n=" +
                                        std::to_string(n));
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edges) { return Graph(n, edges); }

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, edges);
}

VertexRootedGraph::VertexRootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (r < 0 || r >= graph.vertex_count())
        throw std::invalid_argument("root vertex " + std::to_string(r) + " out of range");
}

EdgeRootedGraph::EdgeRootedGraph(Graph g, std::pair<int, int> e) : graph(std::move(g)) {
    if (e.first > e.second) std::swap(e.first, e.second);
    root_edge = e;
    if (e.first < 0 || e.second >= graph.vertex_count() || !graph.has_edge(e.first, e.second))
        throw std::invalid_argument("root edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") not present in graph");
}

int Distance::hops() const {
    if (is_infinite()) throw std::logic_error("infinite distance has no hop count");
    return hops_;
}

Graph delete_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return induced_subgraph(g, ((n == 64 ? ~std::uint64_t{0} : bit(n) - 1)) & ~bit(v));
}

Graph delete_edge(const Graph& g, std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= g.vertex_count() || !g.has_edge(e.first, e.second))
        throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") not present");
    std::vector<std::pair<int, int>> kept;
    for (auto edge : g.edges())
        if (edge != e) kept.push_back(edge);
    return Graph(g.vertex_count(), kept);
}

Graph induced_subgraph(const Graph& g, std::uint64_t vertex_mask) {
    std::vector<int> newindex(static_cast<std::size_t>(g.vertex_count()), -1);
    int m = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (vertex_mask & bit(v)) newindex[static_cast<std::size_t>(v)] = m++;
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edges())
        if ((vertex_mask & bit(u)) && (vertex_mask & bit(v)))
            kept.emplace_back(newindex[static_cast<std::size_t>(u)],
                              newindex[static_cast<std::size_t>(v)]);
    return Graph(m, kept);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : g.edges())
        mapped.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.vertex_count(), mapped);
}

std::vector<Distance> distances_from(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    std::vector<Distance> dist(static_cast<std::size_t>(n), Distance::infinity());
    std::uint64_t seen = bit(v);
    std::uint64_t frontier = bit(v);
    int hops = 0;
    while (frontier) {
        std::uint64_t rest = frontier;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            dist[static_cast<std::size_t>(u)] = Distance::of(hops);
        }
        std::uint64_t next = 0;
        rest = frontier;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            next |= g.neighbor_mask(u);
        }
        frontier = next & ~seen;
        seen |= next;
        ++hops;
    }
    return dist;
}

Distance eccentricity(const Graph& g, int v) {
    Distance worst = Distance::of(0);
    for (Distance d : distances_from(g, v))
        if (worst < d) worst = d;
    return worst;
}

Distance radius(const Graph& g) {
    if (g.vertex_count() == 0) return Distance::infinity();
    Distance best = Distance::infinity();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Distance e = eccentricity(g, v);
        if (e < best) best = e;
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return !eccentricity(g, 0).is_infinite();
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace recon
