#include <doctest.h>

#include "oracle.hpp"
#include "recon/automorphisms.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph6.hpp"
#include "recon/witness.hpp"

using namespace recon;

TEST_CASE("searches over small catalogs self-verify") {
    // whatever turns up must pass the definitional double-check; no
    // existence count is asserted at these orders
    for (int n = 4; n <= 6; ++n) {
        auto catalog = enumerate_graphs(n, true);
        for (DeckKind kind : {DeckKind::vertex, DeckKind::edge}) {
            auto reports = search_pseudosimilar(catalog, kind);
            for (const auto& report : reports) {
                Graph g = parse_graph6(report.graph6);
                if (kind == DeckKind::vertex) {
                    auto [u, v] = report.vertex_pair;
                    CHECK(oracle::isomorphic(delete_vertex(g, u), delete_vertex(g, v)));
                    CHECK_FALSE(vertex_orbits(g).same_block(u, v));
                } else {
                    auto [a, b] = report.edge_pair;
                    CHECK(oracle::isomorphic(delete_edge(g, a), delete_edge(g, b)));
                }
            }
        }
    }
}

TEST_CASE("parallel search agrees with sequential") {
    auto catalog = enumerate_graphs(6, true);
    auto seq = search_pseudosimilar(catalog, DeckKind::vertex, 1);
    auto par = search_pseudosimilar(catalog, DeckKind::vertex, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].graph6 == par[i].graph6);
        CHECK(seq[i].vertex_pair == par[i].vertex_pair);
        CHECK(seq[i].checks == par[i].checks);
    }
}

TEST_CASE("verify_example_patterns rejects similar pairs") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(verify_example_patterns(c4, 0, 1), std::invalid_argument);
    Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(verify_example_patterns(paw, 0, 1), std::invalid_argument);
}

TEST_CASE("pseudo-similar vertices first appear at order 8") {
    // exhaustive absence below: no graph on up to 7 vertices has a
    // pseudo-similar vertex pair (edges manage it from order 6)
    for (int n = 4; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, false, GenMethod::extend).graphs)
            CHECK_FALSE(pseudo_similar_vertices(g).has_pseudo_similar());
}

TEST_CASE("the rediscovered witness has exactly one pseudo-similar pair") {
    Graph g = parse_graph6("G@_qIS");
    auto report = pseudo_similar_vertices(g);
    int pseudo = 0;
    for (const auto& p : report.vertex_pairs)
        if (!p.similar) {
            ++pseudo;
            CHECK(p.a == 5);
            CHECK(p.b == 7);
        }
    CHECK(pseudo == 1);
}

TEST_CASE("report symmetry in the pair order") {
    // fixture found by sweeping the connected 8-vertex catalog
    Graph g = parse_graph6("G@_qIS");
    auto pairs = pseudo_similar_vertices(g);
    int seen = 0;
    for (const auto& p : pairs.vertex_pairs) {
        if (p.similar) continue;
        auto forward = verify_example_patterns(g, p.a, p.b);
        auto backward = verify_example_patterns(g, p.b, p.a);
        CHECK(forward.checks == backward.checks);
        ++seen;
    }
    CHECK(seen > 0);
}

TEST_CASE("an order-6 edge witness verifies") {
    // fixture found by sweeping the order-6 catalog
    Graph g = parse_graph6("E@^W");
    auto pairs = pseudo_similar_edges(g);
    REQUIRE(pairs.has_pseudo_similar());
    for (const auto& p : pairs.edge_pairs) {
        if (p.similar) continue;
        auto report = verify_edge_example_patterns(g, p.a, p.b);
        CHECK(report.kind == DeckKind::edge);
        CHECK(report.checks.count("fig2_balls") == 1);
    }
}
