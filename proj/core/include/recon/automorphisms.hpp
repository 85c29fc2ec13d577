#pragma once

#include <utility>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

enum class ElementKind { vertex, edge };

/// Orbits of the automorphism action on vertices or edges. Blocks are
/// disjoint, cover all elements, and two elements share a block exactly when
/// some automorphism maps one to the other. For edges the elements are
/// indices into `edge_list`.
struct OrbitPartition {
    ElementKind kind = ElementKind::vertex;
    std::vector<std::vector<int>> blocks;       // each sorted, ordered by minimum
    std::vector<std::pair<int, int>> edge_list; // edge kind only: element -> edge

    /// One element per block (the minimum of each block).
    std::vector<int> representatives() const;
    int block_of(int element) const;
    bool same_block(int a, int b) const { return block_of(a) == block_of(b); }
};

/// Complete list of adjacency-preserving permutations, identity included,
/// sorted lexicographically. Full listing is only intended for small graphs;
/// orders above 12 are refused.
std::vector<std::vector<int>> automorphism_group(const Graph& g);

OrbitPartition vertex_orbits(const Graph& g);
OrbitPartition edge_orbits(const Graph& g);

/// |Orbit(v)| in g, via vertex_orbits.
long long vertex_orbit_size(const Graph& g, int v);

/// |Orbit(e)| in g, via edge_orbits.
long long edge_orbit_size(const Graph& g, std::pair<int, int> e);

}  // namespace recon
