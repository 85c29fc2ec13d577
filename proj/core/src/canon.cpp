#include "recon/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace recon {

// Canonical labelling by partition refinement plus backtracking over the
// first non-singleton cell, taking the lexicographically least encoding over
// all leaves of the search tree. Initial cells are the colour classes in
// ascending colour order; refinement only ever splits cells in place, so the
// colour-per-position sequence is the same at every leaf and isomorphic
// inputs produce identical key prefixes.

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by neighbour counts into other cells
// until stable. Fragments are ordered by count, which keeps the procedure
// label-free.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            std::uint64_t splitter = 0;
            for (int v : cells[s]) splitter |= bit(v);
            for (std::size_t d = 0; d < cells.size() && !changed; ++d) {
                auto& cell = cells[d];
                if (cell.size() <= 1) continue;
                int first = std::popcount(g.neighbor_mask(cell[0]) & splitter);
                bool uniform = true;
                for (std::size_t i = 1; i < cell.size(); ++i)
                    if (std::popcount(g.neighbor_mask(cell[i]) & splitter) != first) {
                        uniform = false;
                        break;
                    }
                if (uniform) continue;
                std::vector<std::pair<int, int>> keyed;  // (count, vertex)
                keyed.reserve(cell.size());
                for (int v : cell)
                    keyed.emplace_back(std::popcount(g.neighbor_mask(v) & splitter), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](auto& a, auto& b) { return a.first < b.first; });
                Partition fragments;
                int prev = keyed[0].first - 1;
                for (auto [count, v] : keyed) {
                    if (count != prev) fragments.push_back({});
                    fragments.back().push_back(v);
                    prev = count;
                }
                cells[d] = std::move(fragments[0]);
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(d) + 1,
                             std::make_move_iterator(fragments.begin() + 1),
                             std::make_move_iterator(fragments.end()));
                changed = true;
            }
        }
    }
}

std::string encode_leaf(const Graph& g, const Partition& cells, RootKind kind,
                        const std::vector<int>& colors) {
    int n = g.vertex_count();
    std::string out;
    out.reserve(2 + static_cast<std::size_t>(n) +
                static_cast<std::size_t>(n * (n - 1) / 2 + 7) / 8);
    out.push_back(static_cast<char>(kind));
    out.push_back(static_cast<char>(n));
    std::vector<int> vertex_at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertex_at[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)][0];
    for (int i = 0; i < n; ++i)
        out.push_back(static_cast<char>(colors[static_cast<std::size_t>(vertex_at[static_cast<std::size_t>(i)])]));
    int t = 0;
    char acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<char>(acc << 1);
            if (g.has_edge(vertex_at[static_cast<std::size_t>(i)], vertex_at[static_cast<std::size_t>(j)]))
                acc = static_cast<char>(acc | 1);
            if (++t % 8 == 0) {
                out.push_back(acc);
                acc = 0;
            }
        }
    if (t % 8 != 0) out.push_back(static_cast<char>(acc << (8 - t % 8)));
    return out;
}

void search(const Graph& g, Partition cells, RootKind kind, const std::vector<int>& colors,
            std::string& best, bool& have_best) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) {
            target = i;
            break;
        }
    if (target == cells.size()) {
        std::string enc = encode_leaf(g, cells, kind, colors);
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
        }
        return;
    }
    std::vector<int> choices = cells[target];
    for (int v : choices) {
        Partition next = cells;
        std::vector<int> rest;
        rest.reserve(choices.size() - 1);
        for (int w : choices)
            if (w != v) rest.push_back(w);
        next[target] = {v};
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
        search(g, std::move(next), kind, colors, best, have_best);
    }
}

std::string canonical(const Graph& g, RootKind kind, const std::vector<int>& colors) {
    int n = g.vertex_count();
    Partition initial;
    int maxcolor = 0;
    for (int c : colors) maxcolor = std::max(maxcolor, c);
    for (int c = 0; c <= maxcolor; ++c) {
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[static_cast<std::size_t>(v)] == c) cell.push_back(v);
        if (!cell.empty()) initial.push_back(std::move(cell));
    }
    std::string best;
    bool have_best = false;
    if (n == 0) {
        best.push_back(static_cast<char>(kind));
        best.push_back(0);
        have_best = true;
    } else {
        search(g, std::move(initial), kind, colors, best, have_best);
    }
    return best;
}

struct Decoded {
    int n;
    std::vector<int> colors;
    Graph graph;
};

Decoded decode(const std::string& bytes) {
    if (bytes.size() < 2) throw std::invalid_argument("canon key too short");
    int n = static_cast<unsigned char>(bytes[1]);
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expect = 2 + static_cast<std::size_t>(n) + (bits + 7) / 8;
    if (bytes.size() != expect) throw std::invalid_argument("canon key length mismatch");
    Decoded out;
    out.n = n;
    out.colors.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.colors[static_cast<std::size_t>(i)] = bytes[2 + static_cast<std::size_t>(i)];
    std::vector<std::pair<int, int>> edges;
    std::size_t t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::size_t byte = 2 + static_cast<std::size_t>(n) + t / 8;
            int shift = 7 - static_cast<int>(t % 8);
            if ((static_cast<unsigned char>(bytes[byte]) >> shift) & 1) edges.emplace_back(i, j);
            ++t;
        }
    out.graph = Graph(n, edges);
    return out;
}

}  // namespace

RootKind CanonKey::kind() const {
    if (bytes_.empty()) throw std::logic_error("empty canon key");
    return static_cast<RootKind>(bytes_[0]);
}

int CanonKey::order() const {
    if (bytes_.size() < 2) throw std::logic_error("empty canon key");
    return static_cast<unsigned char>(bytes_[1]);
}

std::string CanonKey::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonKey CanonKey::from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    std::string bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        bytes.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    CanonKey key(std::move(bytes));
    if (key.bytes_.empty()) throw std::invalid_argument("empty canon key");
    char k = key.bytes_[0];
    if (k != 'g' && k != 'v' && k != 'e') throw std::invalid_argument("bad canon key kind");
    decode(key.bytes_);       // validates length and structure
    if (k == 'v') (void)key.root_vertex();
    if (k == 'e') (void)key.root_edge();
    return key;
}

Graph CanonKey::to_graph() const { return decode(bytes_).graph; }

VertexRootedGraph CanonKey::to_vertex_rooted() const {
    if (kind() != RootKind::vertex) throw std::logic_error("canon key is not vertex-rooted");
    Decoded d = decode(bytes_);
    return VertexRootedGraph(std::move(d.graph), root_vertex());
}

EdgeRootedGraph CanonKey::to_edge_rooted() const {
    if (kind() != RootKind::edge) throw std::logic_error("canon key is not edge-rooted");
    Decoded d = decode(bytes_);
    return EdgeRootedGraph(std::move(d.graph), root_edge());
}

int CanonKey::root_vertex() const {
    if (kind() != RootKind::vertex) throw std::logic_error("canon key is not vertex-rooted");
    Decoded d = decode(bytes_);
    for (int v = 0; v < d.n; ++v)
        if (d.colors[static_cast<std::size_t>(v)] == 1) return v;
    throw std::logic_error("vertex-rooted canon key lacks a root colour");
}

std::pair<int, int> CanonKey::root_edge() const {
    if (kind() != RootKind::edge) throw std::logic_error("canon key is not edge-rooted");
    Decoded d = decode(bytes_);
    std::vector<int> marked;
    for (int v = 0; v < d.n; ++v)
        if (d.colors[static_cast<std::size_t>(v)] == 1) marked.push_back(v);
    if (marked.size() != 2 || !d.graph.has_edge(marked[0], marked[1]))
        throw std::logic_error("edge-rooted canon key lacks a root edge");
    return {marked[0], marked[1]};
}

CanonKey canon_key(const Graph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    return CanonKey(canonical(g, RootKind::none, colors));
}

CanonKey canon_key(const VertexRootedGraph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.graph.vertex_count()), 0);
    colors[static_cast<std::size_t>(g.root)] = 1;
    return CanonKey(canonical(g.graph, RootKind::vertex, colors));
}

CanonKey canon_key(const EdgeRootedGraph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.graph.vertex_count()), 0);
    colors[static_cast<std::size_t>(g.root_edge.first)] = 1;
    colors[static_cast<std::size_t>(g.root_edge.second)] = 1;
    return CanonKey(canonical(g.graph, RootKind::edge, colors));
}

}  // namespace recon
