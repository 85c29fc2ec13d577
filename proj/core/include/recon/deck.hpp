#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recon/canon.hpp"
#include "recon/counting.hpp"
#include "recon/graph.hpp"

namespace recon {

enum class DeckKind { vertex, edge };

/// Raised when a deck fails a structural or arithmetic consistency check
/// (e.g. a Kelly division that does not come out integral).
class deck_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiset of cards keyed by canonical certificate. A vertex deck of G has
/// v(G) cards on v(G)-1 vertices each; an edge deck has e(G) cards on v(G)
/// vertices, each short one edge.
class Deck {
public:
    Deck(DeckKind kind, int card_order, std::map<CanonKey, long long> cards);

    static Deck of_cards(DeckKind kind, int card_order,
                         const std::vector<std::pair<Graph, long long>>& cards);

    DeckKind kind() const { return kind_; }
    int card_order() const { return card_order_; }
    long long card_count() const;
    const std::map<CanonKey, long long>& cards() const { return cards_; }

    /// Cards decoded to their canonical representatives, with multiplicity,
    /// in key order.
    std::vector<std::pair<Graph, long long>> materialized() const;

    /// The index-th card of the deck expanded in key order (multiplicities
    /// repeat cards).
    Graph card_at(std::size_t index) const;

    bool operator==(const Deck&) const = default;

private:
    DeckKind kind_;
    int card_order_;
    std::map<CanonKey, long long> cards_;
};

/// D(G): multiset of unlabelled vertex-deleted subgraphs.
Deck deck(const Graph& g);

/// ED(G): multiset of unlabelled edge-deleted subgraphs.
Deck edge_deck(const Graph& g);

struct DeckBasics {
    long long vertices = 0;
    long long edges = 0;
};

/// v(G) and e(G) recovered from the deck alone.
DeckBasics deck_basics(const Deck& d);

/// Kelly count of pattern copies in the unseen graph: vertex decks need
/// v(F) < v(G) and support both modes; edge decks need e(F) < e(G) and
/// support subgraph counts only.
long long kelly_count_from_deck(const Graph& pattern, const Deck& d, CountMode mode);

/// s(F, G^v) (or i) for the vertex v behind the index-th card, from the deck
/// alone: the Kelly total minus the count on that card.
long long count_at_vertex_from_deck(const Graph& pattern, const Deck& d, std::size_t card_index,
                                    CountMode mode);

/// Pairs of vertices (or edges) whose deleted subgraphs are isomorphic,
/// classified as similar (same automorphism orbit) or pseudo-similar.
struct PseudoSimilarReport {
    struct VertexPair {
        int a = 0, b = 0;
        bool similar = false;
    };
    struct EdgePair {
        std::pair<int, int> a{0, 0}, b{0, 0};
        bool similar = false;
    };

    DeckKind kind = DeckKind::vertex;
    std::vector<VertexPair> vertex_pairs;
    std::vector<EdgePair> edge_pairs;

    bool has_pseudo_similar() const;
};

PseudoSimilarReport pseudo_similar_vertices(const Graph& g);
PseudoSimilarReport pseudo_similar_edges(const Graph& g);

/// Text format: header line ">deck vertex|edge <card order>", then one card
/// per line as graph6 with a "×multiplicity" suffix.
void write_deck(const Deck& d, std::ostream& out);
Deck parse_deck(std::istream& in, std::optional<DeckKind> expected_kind = std::nullopt);

}  // namespace recon
