#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph.hpp"

namespace recon {

/// One pseudo-similar pair together with the named pattern checks evaluated
/// on it. Checks are observations, not assertions; all_checks() is true when
/// every evaluated check passed.
struct WitnessReport {
    DeckKind kind = DeckKind::vertex;
    std::string graph6;
    std::pair<int, int> vertex_pair{0, 0};
    std::pair<std::pair<int, int>, std::pair<int, int>> edge_pair{{0, 0}, {0, 0}};
    std::map<std::string, bool> checks;

    bool all_checks() const;
};

/// Evaluate the example patterns at a pseudo-similar vertex pair:
///   example1_table — the paw-root counts are (0,1), (1,0), (1,1) across the
///                    three rootings, up to swapping the pair;
///   example1_p4    — end-rooted P4 counts are s = 3,3 and i = {2,1};
///   example2_balls — the radius-2 balls at the pair are not isomorphic;
///   sec4_structure — radius > 2, candidate set of size 14, reconstructed
///                    profile of total mass 8 with exactly one repeated
///                    entry, and solve prefix 1, 1, 0.
/// Throws if the pair is not pseudo-similar.
WitnessReport verify_example_patterns(const Graph& g, int u, int v);

/// Edge analogue: records whether the radius-4 edge balls at the pair
/// differ (check "fig2_balls"). Throws if the pair is not pseudo-similar.
WitnessReport verify_edge_example_patterns(const Graph& g, std::pair<int, int> a,
                                           std::pair<int, int> b);

/// All graphs in the catalog containing at least one pseudo-similar pair
/// of the requested kind, one report per pair, each re-verified from the
/// definitions before being emitted. Reports are sorted by graph6 string.
std::vector<WitnessReport> search_pseudosimilar(const GraphCatalog& catalog, DeckKind kind,
                                                unsigned jobs = 1);

}  // namespace recon
