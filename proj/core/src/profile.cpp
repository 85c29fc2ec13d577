#include "recon/profile.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "recon/automorphisms.hpp"
#include "recon/counting.hpp"

namespace recon {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int position_in_mask(std::uint64_t mask, int v) {
    return std::popcount(mask & (bit(v) - 1));
}

}  // namespace

VertexRootedGraph ball_vertex(const Graph& g, int v, int k) {
    if (k < 0) throw std::invalid_argument("ball radius must be non-negative");
    auto dist = distances_from(g, v);
    std::uint64_t keep = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dist[static_cast<std::size_t>(u)] <= Distance::of(k)) keep |= bit(u);
    return VertexRootedGraph(induced_subgraph(g, keep), position_in_mask(keep, v));
}

Distance edge_distance(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    if (e1.first > e1.second) std::swap(e1.first, e1.second);
    if (e2.first > e2.second) std::swap(e2.first, e2.second);
    if (!g.has_edge(e1.first, e1.second) || !g.has_edge(e2.first, e2.second))
        throw std::invalid_argument("edge not present");
    if (e1 == e2) return Distance::of(1);

    // A minimal containing path can be truncated so that e1 is its first
    // edge and e2 its last. Try the four orientations; the interior runs
    // from the inner endpoint of e1 to the inner endpoint of e2 avoiding
    // both outer endpoints.
    Distance best = Distance::infinity();
    for (int outer1 : {e1.first, e1.second})
        for (int outer2 : {e2.first, e2.second}) {
            int inner1 = outer1 == e1.first ? e1.second : e1.first;
            int inner2 = outer2 == e2.first ? e2.second : e2.first;
            if (outer1 == outer2 || outer1 == inner2 || inner1 == outer2) continue;
            if (inner1 == inner2) {
                if (best > Distance::of(2)) best = Distance::of(2);
                continue;
            }
            std::uint64_t keep = (g.vertex_count() == 64 ? ~std::uint64_t{0}
                                                         : bit(g.vertex_count()) - 1) &
                                 ~bit(outer1) & ~bit(outer2);
            Graph trimmed = induced_subgraph(g, keep);
            auto dist = distances_from(trimmed, position_in_mask(keep, inner1));
            Distance mid = dist[static_cast<std::size_t>(position_in_mask(keep, inner2))];
            if (!mid.is_infinite()) {
                Distance total = Distance::of(mid.hops() + 2);
                if (total < best) best = total;
            }
        }
    return best;
}

EdgeRootedGraph ball_edge(const Graph& g, std::pair<int, int> e, int k) {
    if (k < 1) throw std::invalid_argument("edge ball radius must be at least 1");
    if (e.first > e.second) std::swap(e.first, e.second);
    std::vector<std::pair<int, int>> kept;
    std::uint64_t vertices = 0;
    for (auto f : g.edges())
        if (edge_distance(g, e, f) <= Distance::of(k)) {
            kept.push_back(f);
            vertices |= bit(f.first) | bit(f.second);
        }
    std::vector<std::pair<int, int>> compacted;
    compacted.reserve(kept.size());
    for (auto [a, b] : kept)
        compacted.emplace_back(position_in_mask(vertices, a), position_in_mask(vertices, b));
    Graph ball(std::popcount(vertices), compacted);
    return EdgeRootedGraph(std::move(ball),
                           {position_in_mask(vertices, e.first), position_in_mask(vertices, e.second)});
}

long long BallProfile::total() const {
    long long sum = 0;
    for (const auto& [key, mult] : entries) sum += mult;
    return sum;
}

BallProfile s_profile(const Graph& g, int k) {
    BallProfile profile;
    profile.kind = DeckKind::vertex;
    profile.k = k;
    for (int v = 0; v < g.vertex_count(); ++v) ++profile.entries[canon_key(ball_vertex(g, v, k))];
    return profile;
}

BallProfile t_profile(const Graph& g, int k) {
    BallProfile profile;
    profile.kind = DeckKind::edge;
    profile.k = k;
    for (auto e : g.edges()) ++profile.entries[canon_key(ball_edge(g, e, k))];
    return profile;
}

namespace {

// Shared triangular solve over candidates already sorted by non-increasing
// edge count (ties by key). lhs and coefficients are supplied per index.
template <typename LhsFn, typename CoeffFn>
std::pair<BallProfile, SolveTrace> solve_recursion(DeckKind kind, int k,
                                                   const std::vector<CanonKey>& keys,
                                                   const std::vector<int>& edge_counts,
                                                   long long expected_total, LhsFn lhs_of,
                                                   CoeffFn coeff) {
    SolveTrace trace;
    trace.kind = kind;
    trace.k = k;
    long long mass = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        SolveTrace::Row row;
        row.key = keys[i];
        row.edge_count = edge_counts[i];
        row.lhs = lhs_of(i);
        row.diagonal = coeff(i, i);
        long long value = row.lhs;
        for (std::size_t j = 0; j < i; ++j) {
            long long c = coeff(i, j);
            if (c == 0) continue;
            long long nj = trace.rows[j].multiplicity;
            row.subtractions.push_back({j, c, nj});
            value -= c * nj;
        }
        row.multiplicity = value;
        trace.rows.push_back(std::move(row));
        if (value < 0)
            throw reconstruction_error("inconsistent deck: negative multiplicity for candidate " +
                                           std::to_string(i),
                                       trace, i);
        if (trace.rows.back().diagonal != 1)
            throw reconstruction_error("candidate self-count is not 1 at row " + std::to_string(i),
                                       trace, i);
        mass += value;
    }
    if (mass != expected_total)
        throw reconstruction_error(
            "inconsistent deck: multiplicities sum to " + std::to_string(mass) + ", expected " +
                std::to_string(expected_total),
            trace, trace.rows.empty() ? 0 : trace.rows.size() - 1);

    BallProfile profile;
    profile.kind = kind;
    profile.k = k;
    for (const auto& row : trace.rows)
        if (row.multiplicity > 0) profile.entries[row.key] = row.multiplicity;
    return {std::move(profile), std::move(trace)};
}

std::vector<CanonKey> sorted_candidates(const std::set<CanonKey>& keys,
                                        std::vector<int>& edge_counts) {
    std::vector<CanonKey> out(keys.begin(), keys.end());
    std::sort(out.begin(), out.end(), [](const CanonKey& a, const CanonKey& b) {
        int ea = a.to_graph().edge_count();
        int eb = b.to_graph().edge_count();
        if (ea != eb) return ea > eb;
        return a < b;
    });
    edge_counts.clear();
    for (const CanonKey& key : out) edge_counts.push_back(key.to_graph().edge_count());
    return out;
}

}  // namespace

std::pair<BallProfile, SolveTrace> reconstruct_s_profile(const Deck& d, int k) {
    if (d.kind() != DeckKind::vertex)
        throw std::invalid_argument("vertex profile reconstruction needs a vertex deck");
    DeckBasics basics = deck_basics(d);

    std::set<CanonKey> keys;
    for (const auto& [card, mult] : d.materialized())
        for (const auto& [key, m] : s_profile(card, k).entries) keys.insert(key);

    std::vector<int> edge_counts;
    std::vector<CanonKey> ordered = sorted_candidates(keys, edge_counts);
    std::vector<VertexRootedGraph> rooted;
    rooted.reserve(ordered.size());
    for (const CanonKey& key : ordered) rooted.push_back(key.to_vertex_rooted());

    auto lhs = [&](std::size_t i) {
        return vertex_orbit_size(rooted[i].graph, rooted[i].root) *
               kelly_count_from_deck(rooted[i].graph, d, CountMode::subgraph);
    };
    auto coeff = [&](std::size_t i, std::size_t j) {
        return count_root_coincident(rooted[i], rooted[j], CountMode::subgraph);
    };
    return solve_recursion(DeckKind::vertex, k, ordered, edge_counts, basics.vertices, lhs,
                           coeff);
}

std::pair<BallProfile, SolveTrace> reconstruct_t_profile(const Deck& ed, int k) {
    if (ed.kind() != DeckKind::edge)
        throw std::invalid_argument("edge profile reconstruction needs an edge deck");
    if (k <= 1) throw std::invalid_argument("edge profile reconstruction needs k > 1");
    DeckBasics basics = deck_basics(ed);

    std::set<CanonKey> keys;
    for (const auto& [card, mult] : ed.materialized())
        for (const auto& [key, m] : t_profile(card, k).entries) keys.insert(key);

    std::vector<int> edge_counts;
    std::vector<CanonKey> ordered = sorted_candidates(keys, edge_counts);
    std::vector<EdgeRootedGraph> rooted;
    rooted.reserve(ordered.size());
    for (const CanonKey& key : ordered) rooted.push_back(key.to_edge_rooted());

    auto lhs = [&](std::size_t i) {
        return edge_orbit_size(rooted[i].graph, rooted[i].root_edge) *
               kelly_count_from_deck(rooted[i].graph, ed, CountMode::subgraph);
    };
    auto coeff = [&](std::size_t i, std::size_t j) {
        return count_root_coincident(rooted[i], rooted[j], CountMode::subgraph);
    };
    return solve_recursion(DeckKind::edge, k, ordered, edge_counts, basics.edges, lhs, coeff);
}

std::optional<int> radius_from_edge_deck(const Deck& ed) {
    if (ed.kind() != DeckKind::edge)
        throw std::invalid_argument("radius recovery needs an edge deck");
    Distance best = Distance::infinity();
    for (const auto& [card, mult] : ed.materialized()) {
        Distance r = radius(card);
        if (r < best) best = r;
    }
    if (best.is_infinite()) return std::nullopt;
    return best.hops();
}

}  // namespace recon
