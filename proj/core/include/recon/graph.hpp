#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace recon {

/// Simple finite undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit neighbour mask per vertex, which caps
/// the order at 64. All values are immutable after construction; every
/// operation on graphs is a pure function.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;

    /// Graph on n isolated vertices.
    explicit Graph(int n);

    /// Graph with the given edges. Duplicate edges are collapsed; self-loops
    /// and out-of-range endpoints are rejected with the offending edge index.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;

    /// Edge list as pairs (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Labelled equality (same order, same adjacency). Use canon keys for
    /// isomorphism.
    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// Graph with a distinguished root vertex.
struct VertexRootedGraph {
    Graph graph;
    int root = 0;

    VertexRootedGraph() = default;
    VertexRootedGraph(Graph g, int r);
    bool operator==(const VertexRootedGraph&) const = default;
};

/// Graph with a distinguished root edge (stored with smaller endpoint first).
struct EdgeRootedGraph {
    Graph graph;
    std::pair<int, int> root_edge{0, 0};

    EdgeRootedGraph() = default;
    EdgeRootedGraph(Graph g, std::pair<int, int> e);
    bool operator==(const EdgeRootedGraph&) const = default;
};

/// Hop distance that is either a finite count or infinity. Infinite compares
/// greater than every finite distance and equal to itself.
class Distance {
public:
    constexpr Distance() = default;
    static constexpr Distance infinity() { return Distance{}; }
    static constexpr Distance of(int hops) { return Distance{hops}; }

    constexpr bool is_infinite() const { return hops_ < 0; }
    int hops() const;  // throws std::logic_error when infinite

    friend constexpr bool operator==(Distance a, Distance b) { return a.hops_ == b.hops_; }
    friend constexpr bool operator<(Distance a, Distance b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.hops_ < b.hops_;
    }
    friend constexpr bool operator<=(Distance a, Distance b) { return a == b || a < b; }
    friend constexpr bool operator>(Distance a, Distance b) { return b < a; }
    friend constexpr bool operator>=(Distance a, Distance b) { return b <= a; }

private:
    constexpr explicit Distance(int h) : hops_(h) {}
    int hops_ = -1;
};

/// G - v: vertex deleted, remaining indices compacted preserving order.
Graph delete_vertex(const Graph& g, int v);

/// G - e: same vertex set with one edge removed. The edge must be present.
Graph delete_edge(const Graph& g, std::pair<int, int> e);

/// Induced subgraph on the vertices in `vertex_mask`, compacted preserving
/// index order.
Graph induced_subgraph(const Graph& g, std::uint64_t vertex_mask);

/// Copy of g with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// BFS hop distances from v; unreachable vertices get Distance::infinity().
std::vector<Distance> distances_from(const Graph& g, int v);

Distance eccentricity(const Graph& g, int v);

/// Minimum eccentricity; infinite iff the graph is disconnected.
Distance radius(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace recon
