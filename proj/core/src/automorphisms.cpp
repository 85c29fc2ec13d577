#include "recon/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace recon {

namespace {

constexpr int listing_limit = 12;

void extend(const Graph& g, std::vector<int>& image, std::vector<bool>& used, int depth,
            std::vector<std::vector<int>>& out) {
    int n = g.vertex_count();
    if (depth == n) {
        out.push_back(image);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (g.degree(w) != g.degree(depth)) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            if (g.has_edge(depth, prev) != g.has_edge(w, image[static_cast<std::size_t>(prev)]))
                ok = false;
        if (!ok) continue;
        image[static_cast<std::size_t>(depth)] = w;
        used[static_cast<std::size_t>(w)] = true;
        extend(g, image, used, depth + 1, out);
        used[static_cast<std::size_t>(w)] = false;
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<std::vector<int>> blocks_from(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> grouped;
    for (int i = 0; i < n; ++i) grouped[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(grouped.size());
    for (auto& [root, members] : grouped) blocks.push_back(std::move(members));
    return blocks;
}

}  // namespace

std::vector<int> OrbitPartition::representatives() const {
    std::vector<int> reps;
    reps.reserve(blocks.size());
    for (const auto& block : blocks) reps.push_back(block.front());
    return reps;
}

int OrbitPartition::block_of(int element) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), element))
            return static_cast<int>(i);
    throw std::invalid_argument("element not covered by orbit partition");
}

std::vector<std::vector<int>> automorphism_group(const Graph& g) {
    if (g.vertex_count() > listing_limit)
        throw std::invalid_argument("automorphism listing refused: order " +
                                    std::to_string(g.vertex_count()) + " exceeds limit " +
                                    std::to_string(listing_limit));
    std::vector<std::vector<int>> out;
    if (g.vertex_count() == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> image(static_cast<std::size_t>(g.vertex_count()));
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    extend(g, image, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

OrbitPartition vertex_orbits(const Graph& g) {
    auto autos = automorphism_group(g);
    UnionFind uf(g.vertex_count());
    for (const auto& perm : autos)
        for (int v = 0; v < g.vertex_count(); ++v) uf.unite(v, perm[static_cast<std::size_t>(v)]);
    OrbitPartition part;
    part.kind = ElementKind::vertex;
    part.blocks = blocks_from(uf, g.vertex_count());
    return part;
}

OrbitPartition edge_orbits(const Graph& g) {
    auto autos = automorphism_group(g);
    auto edges = g.edges();
    std::map<std::pair<int, int>, int> id;
    for (std::size_t i = 0; i < edges.size(); ++i) id[edges[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(edges.size()));
    for (const auto& perm : autos)
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int a = perm[static_cast<std::size_t>(edges[i].first)];
            int b = perm[static_cast<std::size_t>(edges[i].second)];
            if (a > b) std::swap(a, b);
            uf.unite(static_cast<int>(i), id.at({a, b}));
        }
    OrbitPartition part;
    part.kind = ElementKind::edge;
    part.blocks = blocks_from(uf, static_cast<int>(edges.size()));
    part.edge_list = std::move(edges);
    return part;
}

long long vertex_orbit_size(const Graph& g, int v) {
    auto part = vertex_orbits(g);
    return static_cast<long long>(part.blocks[static_cast<std::size_t>(part.block_of(v))].size());
}

long long edge_orbit_size(const Graph& g, std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    auto part = edge_orbits(g);
    auto it = std::find(part.edge_list.begin(), part.edge_list.end(), e);
    if (it == part.edge_list.end()) throw std::invalid_argument("edge not present");
    int id = static_cast<int>(it - part.edge_list.begin());
    return static_cast<long long>(part.blocks[static_cast<std::size_t>(part.block_of(id))].size());
}

}  // namespace recon
