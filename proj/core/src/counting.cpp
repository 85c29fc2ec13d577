#include "recon/counting.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "recon/automorphisms.hpp"

namespace recon {

// Backtracking match over the pattern with degree pruning. Embeddings are
// deduplicated by the occupied vertex and edge sets, so each substructure is
// counted once regardless of pattern symmetry.

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Matcher {
    const Graph& pattern;
    const Graph& host;
    CountMode mode;
    std::vector<int> order;          // pattern vertices in match order
    std::vector<int> image;          // order position -> host vertex
    std::uint64_t used = 0;
    std::vector<std::vector<int>> host_edge_id;
    std::set<std::pair<std::uint64_t, std::uint64_t>> copies;

    Matcher(const Graph& p, const Graph& h, CountMode m) : pattern(p), host(h), mode(m) {
        if (m == CountMode::subgraph && h.edge_count() > 64)
            throw std::invalid_argument("host has more than 64 edges; beyond desk scale");
        int n = h.vertex_count();
        host_edge_id.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        auto edges = h.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            host_edge_id[static_cast<std::size_t>(edges[i].first)][static_cast<std::size_t>(edges[i].second)] = static_cast<int>(i);
            host_edge_id[static_cast<std::size_t>(edges[i].second)][static_cast<std::size_t>(edges[i].first)] = static_cast<int>(i);
        }
    }

    // Match order: fixed roots first, then repeatedly the unplaced vertex
    // with the most placed neighbours (ties to higher degree, lower index).
    void build_order(const std::vector<int>& fixed) {
        int k = pattern.vertex_count();
        std::vector<bool> placed(static_cast<std::size_t>(k), false);
        order = fixed;
        for (int v : fixed) placed[static_cast<std::size_t>(v)] = true;
        while (static_cast<int>(order.size()) < k) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order)
                    if (pattern.has_edge(v, u)) ++links;
                int deg = pattern.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = true;
        }
    }

    bool feasible(int pos, int w) const {
        int p = order[static_cast<std::size_t>(pos)];
        if (host.degree(w) < pattern.degree(p)) return false;
        for (int prev = 0; prev < pos; ++prev) {
            int q = order[static_cast<std::size_t>(prev)];
            bool pe = pattern.has_edge(p, q);
            bool he = host.has_edge(w, image[static_cast<std::size_t>(prev)]);
            if (pe && !he) return false;
            if (mode == CountMode::induced && !pe && he) return false;
        }
        return true;
    }

    void record() {
        std::uint64_t vmask = 0;
        for (int w : image) vmask |= bit(w);
        std::uint64_t emask = 0;
        if (mode == CountMode::subgraph) {
            int k = pattern.vertex_count();
            std::vector<int> host_of(static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < order.size(); ++i)
                host_of[static_cast<std::size_t>(order[i])] = image[i];
            for (auto [a, b] : pattern.edges())
                emask |= bit(host_edge_id[static_cast<std::size_t>(host_of[static_cast<std::size_t>(a)])]
                                         [static_cast<std::size_t>(host_of[static_cast<std::size_t>(b)])]);
        }
        copies.emplace(vmask, emask);
    }

    void match(int pos) {
        if (pos == static_cast<int>(order.size())) {
            record();
            return;
        }
        int p = order[static_cast<std::size_t>(pos)];
        // candidate set: neighbours of some placed neighbour, else everything
        std::uint64_t candidates = 0;
        bool constrained = false;
        for (int prev = 0; prev < pos && !constrained; ++prev)
            if (pattern.has_edge(p, order[static_cast<std::size_t>(prev)])) {
                candidates = host.neighbor_mask(image[static_cast<std::size_t>(prev)]);
                constrained = true;
            }
        if (!constrained)
            candidates = host.vertex_count() == 64 ? ~std::uint64_t{0} : bit(host.vertex_count()) - 1;
        candidates &= ~used;
        while (candidates) {
            int w = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (!feasible(pos, w)) continue;
            image.push_back(w);
            used |= bit(w);
            match(pos + 1);
            used &= ~bit(w);
            image.pop_back();
        }
    }

    long long run(const std::vector<int>& fixed_pattern, const std::vector<int>& fixed_host) {
        if (pattern.vertex_count() > host.vertex_count()) return 0;
        build_order(fixed_pattern);
        copies.clear();
        image.clear();
        used = 0;
        for (std::size_t i = 0; i < fixed_host.size(); ++i) {
            int w = fixed_host[i];
            if (!feasible(static_cast<int>(i), w)) {
                return 0;
            }
            image.push_back(w);
            used |= bit(w);
        }
        match(static_cast<int>(fixed_host.size()));
        return static_cast<long long>(copies.size());
    }
};

}  // namespace

long long count_copies(const Graph& pattern, const Graph& host, CountMode mode) {
    Matcher m(pattern, host, mode);
    return m.run({}, {});
}

long long count_subgraphs(const Graph& pattern, const Graph& host) {
    return count_copies(pattern, host, CountMode::subgraph);
}

long long count_induced(const Graph& pattern, const Graph& host) {
    return count_copies(pattern, host, CountMode::induced);
}

long long count_at_vertex(const Graph& pattern, const Graph& host, int v, CountMode mode) {
    if (v < 0 || v >= host.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    long long by_deletion =
        count_copies(pattern, host, mode) - count_copies(pattern, delete_vertex(host, v), mode);

    // independent route: enumerate copies and keep those through v
    Matcher m(pattern, host, mode);
    if (pattern.vertex_count() > host.vertex_count()) {
        if (by_deletion != 0) throw std::logic_error("count_at_vertex route mismatch");
        return 0;
    }
    m.build_order({});
    m.match(0);
    long long direct = 0;
    for (const auto& [vmask, emask] : m.copies)
        if (vmask & bit(v)) ++direct;
    if (direct != by_deletion) throw std::logic_error("count_at_vertex route mismatch");
    return direct;
}

long long count_root_coincident(const VertexRootedGraph& pattern, const VertexRootedGraph& host,
                                CountMode mode) {
    Matcher m(pattern.graph, host.graph, mode);
    return m.run({pattern.root}, {host.root});
}

long long count_root_coincident(const EdgeRootedGraph& pattern, const EdgeRootedGraph& host,
                                CountMode mode) {
    auto [pa, pb] = pattern.root_edge;
    auto [ha, hb] = host.root_edge;
    Matcher m1(pattern.graph, host.graph, mode);
    long long forward = m1.run({pa, pb}, {ha, hb});
    Matcher m2(pattern.graph, host.graph, mode);
    long long backward = m2.run({pa, pb}, {hb, ha});
    // the two orientations can produce the same substructure; merge the sets
    for (const auto& c : m2.copies) m1.copies.insert(c);
    (void)forward;
    (void)backward;
    return static_cast<long long>(m1.copies.size());
}

std::map<int, long long> orbit_decompose_count(const Graph& pattern, const VertexRootedGraph& host,
                                               CountMode mode) {
    auto orbits = vertex_orbits(pattern);
    std::map<int, long long> out;
    long long sum = 0;
    for (int rep : orbits.representatives()) {
        long long c = count_root_coincident(VertexRootedGraph(pattern, rep), host, mode);
        out[rep] = c;
        sum += c;
    }
    if (sum != count_at_vertex(pattern, host.graph, host.root, mode))
        throw std::logic_error("orbit decomposition does not sum to the at-vertex count");
    return out;
}

long long count_rooted_total(const VertexRootedGraph& pattern, const Graph& host) {
    return vertex_orbit_size(pattern.graph, pattern.root) *
           count_subgraphs(pattern.graph, host);
}

}  // namespace recon
