#pragma once

#include <compare>
#include <string>

#include "recon/graph.hpp"

namespace recon {

enum class RootKind : char { none = 'g', vertex = 'v', edge = 'e' };

/// Canonical certificate of a graph, optionally rooted at a vertex or an
/// edge. Two keys are equal exactly when the underlying objects are
/// isomorphic; rooted keys require the isomorphism to map root to root (for
/// edge roots, endpoint set to endpoint set).
///
/// The byte string is invertible: to_graph() and friends rebuild the
/// canonical representative, whose labelling is the one the certificate
/// describes.
class CanonKey {
public:
    CanonKey() = default;

    RootKind kind() const;
    int order() const;
    const std::string& bytes() const { return bytes_; }

    std::string hex() const;
    static CanonKey from_hex(const std::string& hex);

    /// Canonical representative, root information dropped.
    Graph to_graph() const;
    VertexRootedGraph to_vertex_rooted() const;  // requires kind() == vertex
    EdgeRootedGraph to_edge_rooted() const;      // requires kind() == edge

    int root_vertex() const;
    std::pair<int, int> root_edge() const;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend std::strong_ordering operator<=>(const CanonKey& a, const CanonKey& b) {
        return a.bytes_.compare(b.bytes_) <=> 0;
    }

private:
    explicit CanonKey(std::string b) : bytes_(std::move(b)) {}
    std::string bytes_;

    friend CanonKey canon_key(const Graph&);
    friend CanonKey canon_key(const VertexRootedGraph&);
    friend CanonKey canon_key(const EdgeRootedGraph&);
};

CanonKey canon_key(const Graph& g);
CanonKey canon_key(const VertexRootedGraph& g);
CanonKey canon_key(const EdgeRootedGraph& g);

}  // namespace recon
