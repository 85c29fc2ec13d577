#pragma once

#include <map>
#include <optional>
#include <string>

#include "recon/canon.hpp"
#include "recon/graph.hpp"

namespace recon {

enum class CountMode { subgraph, induced };

/// s(F,G): substructures (vertex subset plus edge subset) of the host
/// isomorphic to the pattern, each counted once no matter how many
/// isomorphisms realise it. Zero when the pattern has more vertices.
long long count_subgraphs(const Graph& pattern, const Graph& host);

/// i(F,G): vertex subsets of the host whose induced subgraph is isomorphic
/// to the pattern.
long long count_induced(const Graph& pattern, const Graph& host);

long long count_copies(const Graph& pattern, const Graph& host, CountMode mode);

/// Copies that contain the host vertex v. Computed two ways — whole minus
/// vertex-deleted, and direct enumeration restricted to copies through v —
/// which must agree.
long long count_at_vertex(const Graph& pattern, const Graph& host, int v, CountMode mode);

/// Rooted copies of the pattern whose root lands exactly on the host root.
long long count_root_coincident(const VertexRootedGraph& pattern, const VertexRootedGraph& host,
                                CountMode mode);

/// Edge-rooted analogue: copies whose root edge lands on the host root edge
/// (endpoint set to endpoint set).
long long count_root_coincident(const EdgeRootedGraph& pattern, const EdgeRootedGraph& host,
                                CountMode mode);

/// Root-coincident counts keyed by one representative per vertex orbit of
/// the pattern; the values sum to count_at_vertex.
std::map<int, long long> orbit_decompose_count(const Graph& pattern, const VertexRootedGraph& host,
                                               CountMode mode);

/// s(F^x, G) = |Orbit_F(x)| * s(F, G): rooted subgraphs of the host
/// isomorphic to the rooted pattern, the root free to land anywhere.
long long count_rooted_total(const VertexRootedGraph& pattern, const Graph& host);

/// Machine-readable record of one counting query.
struct CountReport {
    CanonKey pattern;
    CanonKey host;
    CountMode mode = CountMode::subgraph;
    std::string rooted = "none";  // none | at-vertex | root-coincident
    long long value = 0;
};

}  // namespace recon
