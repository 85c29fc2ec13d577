#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "recon/counting.hpp"
#include "recon/deck.hpp"
#include "recon/graph.hpp"

namespace recon {

/// Catalog of the connected rooted graphs on at most 4 vertices, one entry
/// per rooted isomorphism class.
struct RootedCatalogEntry {
    std::string name;
    VertexRootedGraph rooted;
    std::string description;
};

const std::vector<RootedCatalogEntry>& rooted_catalog();
const RootedCatalogEntry& catalog_entry(std::string_view name);

enum class IdentityId { I1, I2, I3, I4, I5, I6, I7 };

std::string identity_name(IdentityId id);

/// Evaluation of one counting identity at a vertex: two or three expressions
/// that must all agree.
struct IdentityRecord {
    IdentityId id = IdentityId::I1;
    std::vector<std::pair<std::string, long long>> sides;
    bool holds = false;
};

IdentityRecord eval_identity(IdentityId id, const Graph& g, int v);
std::vector<IdentityRecord> eval_all_identities(const Graph& g, int v);

/// Rooted counts at the vertex behind a card that the deck alone determines.
/// Keys are quantity names such as "d_v", "s(P3c)", "i(K3)",
/// "s(paw1)+s(paw2)". Entries whose Kelly precondition fails for this deck
/// are omitted (the 4-vertex entries need v(G) >= 5).
std::map<std::string, long long> derive_rooted_counts_from_deck(const Deck& d,
                                                                std::size_t card_index);

/// Side-by-side rooted counts at a pseudo-similar pair, exhibiting the
/// quantities the deck cannot pin down.
struct NonreconstructibilityReport {
    struct Row {
        std::string entry;
        CountMode mode = CountMode::subgraph;
        long long at_u = 0;
        long long at_v = 0;
        bool differs = false;
    };

    int u = 0, v = 0;
    std::vector<Row> rows;
};

NonreconstructibilityReport nonreconstructibility_report(const Graph& witness, int u, int v);

}  // namespace recon
