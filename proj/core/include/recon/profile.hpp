#pragma once

#include <map>
#include <optional>
#include <vector>

#include "recon/canon.hpp"
#include "recon/deck.hpp"
#include "recon/graph.hpp"

namespace recon {

/// G_k^v: subgraph induced by the vertices at distance at most k from v,
/// rooted at v. Always connected.
VertexRootedGraph ball_vertex(const Graph& g, int v, int k);

/// Distance between two edges: the number of edges of a minimal path (as a
/// subgraph) containing both. d(e,e) = 1, adjacent edges are at distance 2,
/// and edges no path can contain together are infinitely far apart.
Distance edge_distance(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2);

/// G_k^e: subgraph formed by the edges at edge-distance at most k from e
/// (vertices are the retained endpoints), rooted at e. Requires k >= 1.
EdgeRootedGraph ball_edge(const Graph& g, std::pair<int, int> e, int k);

/// S_k(G) / T_k(G): multiset of rooted canon keys of all vertex (edge)
/// balls. Total multiplicity is v(G) for vertex profiles and e(G) for edge
/// profiles.
struct BallProfile {
    DeckKind kind = DeckKind::vertex;
    int k = 0;
    std::map<CanonKey, long long> entries;

    long long total() const;
    bool operator==(const BallProfile&) const = default;
};

BallProfile s_profile(const Graph& g, int k);
BallProfile t_profile(const Graph& g, int k);

/// Record of the triangular recursion, one row per candidate in solve
/// order (edge counts non-increasing, ties by canon key).
struct SolveTrace {
    struct Term {
        std::size_t candidate = 0;  // index of the earlier row
        long long coeff = 0;        // s(A_i, B_j) root-coincident
        long long multiplicity = 0; // n(B_j) at subtraction time
    };
    struct Row {
        CanonKey key;
        int edge_count = 0;
        long long lhs = 0;       // |Orbit(root)| * Kelly count from the deck
        long long diagonal = 1;  // s(A, A), always 1
        std::vector<Term> subtractions;
        long long multiplicity = 0;
    };

    DeckKind kind = DeckKind::vertex;
    int k = 0;
    std::vector<Row> rows;
};

/// Raised when the triangular solve detects that no graph satisfying the
/// stated precondition can have produced this deck: a negative multiplicity
/// or a total mass different from the card count.
class reconstruction_error : public deck_error {
public:
    reconstruction_error(const std::string& what, SolveTrace partial, std::size_t offending_row)
        : deck_error(what), trace(std::move(partial)), offending(offending_row) {}

    SolveTrace trace;
    std::size_t offending;
};

/// Reconstruct S_k(G) from the vertex deck of a connected graph whose
/// radius exceeds k (caller-asserted). Candidates are the distinct rooted
/// balls of the cards; multiplicities come from solving the triangular
/// system in non-increasing edge-count order.
std::pair<BallProfile, SolveTrace> reconstruct_s_profile(const Deck& d, int k);

/// Edge-deck mirror, reconstructing T_k(G); requires k > 1 on top of the
/// radius precondition.
std::pair<BallProfile, SolveTrace> reconstruct_t_profile(const Deck& ed, int k);

/// Radius from the edge deck: min of the card radii when some card is
/// connected; nullopt (the "tree-or-disconnected" signal) otherwise.
std::optional<int> radius_from_edge_deck(const Deck& ed);

}  // namespace recon
