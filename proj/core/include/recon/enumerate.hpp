#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

enum class GenMethod {
    automatic,  // labelled filtering up to order 6, vertex extension beyond
    labeled,    // filter all labelled graphs down to canonical representatives
    extend      // grow representatives of order n-1 by one vertex, dedup
};

/// One canonical representative per isomorphism class, duplicate-free,
/// sorted by (edge count, graph6 string).
struct GraphCatalog {
    int order = 0;
    bool connected_only = false;
    std::string source;  // "generated" or the file path
    std::vector<Graph> graphs;
};

/// Built-in generation up to order 8; larger orders must be ingested from a
/// graph6 file. Both methods produce the identical catalog; the labelled
/// route is exponential in the order and only sensible up to 6 or so.
GraphCatalog enumerate_graphs(int n, bool connected_only, GenMethod method = GenMethod::automatic);

/// Ingest a graph6 catalog file (one graph per line, uniform order). With
/// verify_distinct, canon-dedup is run and duplicates are an error.
GraphCatalog load_catalog(const std::string& path, bool verify_distinct = true);

void write_catalog(const GraphCatalog& catalog, std::ostream& out);

}  // namespace recon
