#include "recon/deck.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "recon/automorphisms.hpp"
#include "recon/graph6.hpp"

namespace recon {

Deck::Deck(DeckKind kind, int card_order, std::map<CanonKey, long long> cards)
    : kind_(kind), card_order_(card_order), cards_(std::move(cards)) {
    for (const auto& [key, mult] : cards_) {
        if (mult < 1) throw deck_error("card multiplicity must be at least 1");
        if (key.kind() != RootKind::none) throw deck_error("deck cards must be unrooted");
        if (key.order() != card_order_) throw deck_error("cards of mixed order in deck");
    }
    if (kind_ == DeckKind::vertex) {
        if (card_count() != card_order_ + 1)
            throw deck_error("vertex deck must have exactly one card per vertex");
    } else {
        long long edges = -1;
        for (const auto& [key, mult] : cards_) {
            long long e = key.to_graph().edge_count();
            if (edges == -1) edges = e;
            if (e != edges) throw deck_error("cards of mixed edge count in edge deck");
        }
        if (edges != -1 && edges != card_count() - 1)
            throw deck_error("edge deck must have one more edge than each card");
    }
}

Deck Deck::of_cards(DeckKind kind, int card_order,
                    const std::vector<std::pair<Graph, long long>>& cards) {
    std::map<CanonKey, long long> keyed;
    for (const auto& [g, mult] : cards) keyed[canon_key(g)] += mult;
    return Deck(kind, card_order, std::move(keyed));
}

long long Deck::card_count() const {
    long long total = 0;
    for (const auto& [key, mult] : cards_) total += mult;
    return total;
}

std::vector<std::pair<Graph, long long>> Deck::materialized() const {
    std::vector<std::pair<Graph, long long>> out;
    out.reserve(cards_.size());
    for (const auto& [key, mult] : cards_) out.emplace_back(key.to_graph(), mult);
    return out;
}

Graph Deck::card_at(std::size_t index) const {
    for (const auto& [key, mult] : cards_) {
        if (index < static_cast<std::size_t>(mult)) return key.to_graph();
        index -= static_cast<std::size_t>(mult);
    }
    throw std::out_of_range("card index past end of deck");
}

Deck deck(const Graph& g) {
    std::map<CanonKey, long long> cards;
    for (int v = 0; v < g.vertex_count(); ++v) ++cards[canon_key(delete_vertex(g, v))];
    return Deck(DeckKind::vertex, g.vertex_count() - 1, std::move(cards));
}

Deck edge_deck(const Graph& g) {
    std::map<CanonKey, long long> cards;
    for (auto e : g.edges()) ++cards[canon_key(delete_edge(g, e))];
    return Deck(DeckKind::edge, g.vertex_count(), std::move(cards));
}

DeckBasics deck_basics(const Deck& d) {
    DeckBasics out;
    if (d.kind() == DeckKind::vertex) {
        out.vertices = d.card_count();
        if (out.vertices == 1) {
            out.edges = 0;
            return out;
        }
        if (out.vertices == 2)
            throw deck_error("edge count of a 2-vertex graph is not determined by its deck");
        long long total = 0;
        for (const auto& [key, mult] : d.cards())
            total += mult * key.to_graph().edge_count();
        long long div = out.vertices - 2;
        if (total % div != 0)
            throw deck_error("inconsistent deck: card edge counts do not divide evenly");
        out.edges = total / div;
    } else {
        if (d.card_count() == 0) {
            out.vertices = d.card_order();
            out.edges = 0;
            return out;
        }
        out.vertices = d.card_order();
        out.edges = d.card_count();
    }
    return out;
}

long long kelly_count_from_deck(const Graph& pattern, const Deck& d, CountMode mode) {
    if (d.kind() == DeckKind::vertex) {
        long long host_vertices = d.card_count();
        if (pattern.vertex_count() >= host_vertices)
            throw std::invalid_argument("Kelly count needs v(F) < v(G)");
        long long total = 0;
        for (const auto& [card, mult] : d.materialized())
            total += mult * count_copies(pattern, card, mode);
        long long div = host_vertices - pattern.vertex_count();
        if (total % div != 0) throw deck_error("inconsistent deck: Kelly division not integral");
        return total / div;
    }
    if (mode == CountMode::induced)
        throw std::invalid_argument("induced counts are not edge-reconstructible; use subgraph mode");
    long long host_edges = d.card_count();
    if (pattern.edge_count() >= host_edges)
        throw std::invalid_argument("edge Kelly count needs e(F) < e(G)");
    long long total = 0;
    for (const auto& [card, mult] : d.materialized())
        total += mult * count_subgraphs(pattern, card);
    long long div = host_edges - pattern.edge_count();
    if (total % div != 0) throw deck_error("inconsistent deck: Kelly division not integral");
    return total / div;
}

long long count_at_vertex_from_deck(const Graph& pattern, const Deck& d, std::size_t card_index,
                                    CountMode mode) {
    if (d.kind() != DeckKind::vertex)
        throw std::invalid_argument("at-vertex counts require a vertex deck");
    return kelly_count_from_deck(pattern, d, mode) -
           count_copies(pattern, d.card_at(card_index), mode);
}

bool PseudoSimilarReport::has_pseudo_similar() const {
    for (const auto& p : vertex_pairs)
        if (!p.similar) return true;
    for (const auto& p : edge_pairs)
        if (!p.similar) return true;
    return false;
}

PseudoSimilarReport pseudo_similar_vertices(const Graph& g) {
    PseudoSimilarReport report;
    report.kind = DeckKind::vertex;
    int n = g.vertex_count();
    std::vector<CanonKey> card_keys;
    card_keys.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) card_keys.push_back(canon_key(delete_vertex(g, v)));
    std::optional<OrbitPartition> orbits;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (card_keys[static_cast<std::size_t>(u)] != card_keys[static_cast<std::size_t>(v)]) continue;
            if (!orbits) orbits = vertex_orbits(g);
            report.vertex_pairs.push_back({u, v, orbits->same_block(u, v)});
        }
    return report;
}

PseudoSimilarReport pseudo_similar_edges(const Graph& g) {
    PseudoSimilarReport report;
    report.kind = DeckKind::edge;
    auto edges = g.edges();
    std::vector<CanonKey> card_keys;
    card_keys.reserve(edges.size());
    for (auto e : edges) card_keys.push_back(canon_key(delete_edge(g, e)));
    std::optional<OrbitPartition> orbits;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (card_keys[i] != card_keys[j]) continue;
            if (!orbits) orbits = edge_orbits(g);
            report.edge_pairs.push_back(
                {edges[i], edges[j],
                 orbits->same_block(static_cast<int>(i), static_cast<int>(j))});
        }
    return report;
}

void write_deck(const Deck& d, std::ostream& out) {
    out << ">deck " << (d.kind() == DeckKind::vertex ? "vertex" : "edge") << ' '
        << d.card_order() << '\n';
    for (const auto& [key, mult] : d.cards())
        out << write_graph6(key.to_graph()) << "×" << mult << '\n';
}

Deck parse_deck(std::istream& in, std::optional<DeckKind> expected_kind) {
    std::string line;
    int lineno = 0;
    std::optional<DeckKind> kind;
    std::optional<int> declared_order;
    std::vector<std::pair<Graph, long long>> cards;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '>') {
            std::istringstream header(line.substr(1));
            std::string tag, kind_word;
            int order = 0;
            header >> tag >> kind_word >> order;
            if (tag != "deck" || (kind_word != "vertex" && kind_word != "edge") || header.fail())
                throw deck_error("line " + std::to_string(lineno) + ": bad deck header");
            kind = kind_word == "vertex" ? DeckKind::vertex : DeckKind::edge;
            declared_order = order;
            continue;
        }
        // card line: graph6, optionally followed by a multiplicity suffix
        std::size_t cut = line.size();
        long long mult = 1;
        static const std::string times = "×";
        std::size_t pos = line.find(times);
        if (pos == std::string::npos) pos = line.find(" x");
        if (pos != std::string::npos) {
            cut = pos;
            std::size_t digits = pos + (line[pos] == ' ' ? 2 : times.size());
            try {
                mult = std::stoll(line.substr(digits));
            } catch (const std::exception&) {
                throw deck_error("line " + std::to_string(lineno) + ": bad multiplicity");
            }
        }
        try {
            cards.emplace_back(parse_graph6(line.substr(0, cut)), mult);
        } catch (const std::exception& e) {
            throw deck_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (cards.empty() && !declared_order) throw deck_error("empty deck file");
    if (!kind) {
        if (!expected_kind) throw deck_error("deck file lacks a header; pass the kind explicitly");
        kind = expected_kind;
    } else if (expected_kind && *expected_kind != *kind) {
        throw deck_error("deck header kind contradicts the requested kind");
    }
    int order = declared_order ? *declared_order
                               : cards.front().first.vertex_count();
    return Deck::of_cards(*kind, order, cards);
}

}  // namespace recon
