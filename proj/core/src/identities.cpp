#include "recon/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "recon/automorphisms.hpp"

namespace recon {

namespace {

std::vector<RootedCatalogEntry> build_catalog() {
    Graph k2(2, {{0, 1}});
    Graph p3(3, {{0, 1}, {1, 2}});
    Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Graph dia(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    return {
        {"E1", {k2, 0}, "single edge, rooted (both rootings coincide)"},
        {"P3c", {p3, 1}, "path on 3 vertices rooted at the centre"},
        {"P3e", {p3, 0}, "path on 3 vertices rooted at an end"},
        {"K3", {k3, 0}, "triangle, rooted"},
        {"K13c", {star, 0}, "claw rooted at the centre"},
        {"K13l", {star, 1}, "claw rooted at a leaf"},
        {"P4e", {p4, 0}, "path on 4 vertices rooted at an end"},
        {"P4i", {p4, 1}, "path on 4 vertices rooted at an interior vertex"},
        {"paw1", {paw, 3}, "paw rooted at the pendant vertex (degree 1)"},
        {"paw2", {paw, 0}, "paw rooted at a degree-2 vertex"},
        {"paw3", {paw, 2}, "paw rooted at the degree-3 vertex"},
        {"C4", {c4, 0}, "4-cycle, rooted"},
        {"dia2", {dia, 2}, "diamond rooted at a degree-2 vertex"},
        {"dia3", {dia, 0}, "diamond rooted at a degree-3 vertex"},
        {"K4", {k4, 0}, "complete graph on 4 vertices, rooted"},
    };
}

long long binom2(long long d) { return d < 2 ? 0 : d * (d - 1) / 2; }
long long binom3(long long d) { return d < 3 ? 0 : d * (d - 1) * (d - 2) / 6; }

struct Evaluator {
    const Graph& g;
    VertexRootedGraph host;

    Evaluator(const Graph& graph, int v) : g(graph), host(graph, v) {}

    long long s(std::string_view name) const {
        return count_root_coincident(catalog_entry(name).rooted, host, CountMode::subgraph);
    }
    long long i(std::string_view name) const {
        return count_root_coincident(catalog_entry(name).rooted, host, CountMode::induced);
    }
    long long d() const { return g.degree(host.root); }
};

}  // namespace

const std::vector<RootedCatalogEntry>& rooted_catalog() {
    static const std::vector<RootedCatalogEntry> catalog = build_catalog();
    return catalog;
}

const RootedCatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& entry : rooted_catalog())
        if (entry.name == name) return entry;
    throw std::invalid_argument("no catalog entry named " + std::string(name));
}

std::string identity_name(IdentityId id) {
    return "I" + std::to_string(static_cast<int>(id) + 1);
}

IdentityRecord eval_identity(IdentityId id, const Graph& g, int v) {
    Evaluator ev(g, v);
    long long d = ev.d();
    IdentityRecord rec;
    rec.id = id;
    switch (id) {
        case IdentityId::I1:
            rec.sides = {{"i(E1)", ev.i("E1")}, {"s(E1)", ev.s("E1")}, {"d_v", d}};
            break;
        case IdentityId::I2:
            rec.sides = {{"s(P3c)", ev.s("P3c")},
                         {"C(d_v,2)", binom2(d)},
                         {"i(P3c)+i(K3)", ev.i("P3c") + ev.i("K3")}};
            break;
        case IdentityId::I3:
            rec.sides = {{"s(K13c)", ev.s("K13c")},
                         {"C(d_v,3)", binom3(d)},
                         {"i(K13c)+i(paw3)+i(dia3)+i(K4)",
                          ev.i("K13c") + ev.i("paw3") + ev.i("dia3") + ev.i("K4")}};
            break;
        case IdentityId::I4:
            rec.sides = {{"s(paw3)", ev.s("paw3")},
                         {"i(K3)*(d_v-2)", ev.i("K3") * (d - 2)},
                         {"i(paw3)+2i(dia3)+3i(K4)",
                          ev.i("paw3") + 2 * ev.i("dia3") + 3 * ev.i("K4")}};
            break;
        case IdentityId::I5:
            rec.sides = {{"s(K13l)", ev.s("K13l")},
                         {"i(K13l)+i(paw2)+i(paw1)+i(dia3)+2i(dia2)+3i(K4)",
                          ev.i("K13l") + ev.i("paw2") + ev.i("paw1") + ev.i("dia3") +
                              2 * ev.i("dia2") + 3 * ev.i("K4")}};
            break;
        case IdentityId::I6:
            rec.sides = {{"s(P4i)", ev.s("P4i")},
                         {"s(P3e)*(d_v-1)-2i(K3)", ev.s("P3e") * (d - 1) - 2 * ev.i("K3")},
                         {"i(P4i)+2i(C4)+i(paw2)+2i(dia2)+4i(dia3)+6i(K4)+2i(paw3)",
                          ev.i("P4i") + 2 * ev.i("C4") + ev.i("paw2") + 2 * ev.i("dia2") +
                              4 * ev.i("dia3") + 6 * ev.i("K4") + 2 * ev.i("paw3")}};
            break;
        case IdentityId::I7:
            rec.sides = {{"s(P4e)", ev.s("P4e")},
                         {"i(P4e)+2i(C4)+2i(paw1)+i(paw2)+2i(dia3)+4i(dia2)+6i(K4)",
                          ev.i("P4e") + 2 * ev.i("C4") + 2 * ev.i("paw1") + ev.i("paw2") +
                              2 * ev.i("dia3") + 4 * ev.i("dia2") + 6 * ev.i("K4")}};
            break;
    }
    rec.holds = std::all_of(rec.sides.begin(), rec.sides.end(),
                            [&](const auto& side) { return side.second == rec.sides[0].second; });
    return rec;
}

std::vector<IdentityRecord> eval_all_identities(const Graph& g, int v) {
    std::vector<IdentityRecord> out;
    for (IdentityId id : {IdentityId::I1, IdentityId::I2, IdentityId::I3, IdentityId::I4,
                          IdentityId::I5, IdentityId::I6, IdentityId::I7})
        out.push_back(eval_identity(id, g, v));
    return out;
}

std::map<std::string, long long> derive_rooted_counts_from_deck(const Deck& d,
                                                                std::size_t card_index) {
    if (d.kind() != DeckKind::vertex)
        throw std::invalid_argument("rooted count derivation needs a vertex deck");
    DeckBasics basics = deck_basics(d);
    long long vg = basics.vertices;
    Graph card = d.card_at(card_index);
    std::map<std::string, long long> out;

    long long dv = basics.edges - card.edge_count();
    out["d_v"] = dv;
    out["s(E1)"] = dv;
    out["i(E1)"] = dv;

    auto at_vertex = [&](std::string_view name, CountMode mode) {
        return kelly_count_from_deck(catalog_entry(name).rooted.graph, d, mode) -
               count_copies(catalog_entry(name).rooted.graph, card, mode);
    };

    if (vg >= 4) {
        long long s_p3c = binom2(dv);
        long long i_k3 = at_vertex("K3", CountMode::induced);
        out["s(P3c)"] = s_p3c;
        out["i(P3c)"] = s_p3c - i_k3;
        out["s(K3)"] = at_vertex("K3", CountMode::subgraph);
        out["i(K3)"] = i_k3;
        long long s_p3e = at_vertex("P3c", CountMode::subgraph) - s_p3c;
        out["s(P3e)"] = s_p3e;
        out["i(P3e)"] = at_vertex("P3c", CountMode::induced) - out["i(P3c)"];

        if (vg >= 5) {
            out["s(K13c)"] = binom3(dv);
            long long s_paw3 = i_k3 * (dv - 2);
            out["s(paw3)"] = s_paw3;
            out["s(paw1)+s(paw2)"] = at_vertex("paw1", CountMode::subgraph) - s_paw3;
            long long s_p4i = s_p3e * (dv - 1) - 2 * i_k3;
            out["s(P4i)"] = s_p4i;
            out["s(P4e)"] = at_vertex("P4e", CountMode::subgraph) - s_p4i;
            out["s(K13l)"] = at_vertex("K13c", CountMode::subgraph) - out["s(K13c)"];
        }
    }
    return out;
}

NonreconstructibilityReport nonreconstructibility_report(const Graph& witness, int u, int v) {
    auto report = pseudo_similar_vertices(witness);
    bool found = false;
    for (const auto& pair : report.vertex_pairs)
        if (!pair.similar && ((pair.a == u && pair.b == v) || (pair.a == v && pair.b == u)))
            found = true;
    if (!found)
        throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                    " are not pseudo-similar");

    NonreconstructibilityReport out;
    out.u = u;
    out.v = v;
    VertexRootedGraph at_u(witness, u);
    VertexRootedGraph at_v(witness, v);
    for (std::string_view name : {"paw1", "paw2", "paw3", "P4e"})
        for (CountMode mode : {CountMode::subgraph, CountMode::induced}) {
            const auto& entry = catalog_entry(name);
            long long cu = count_root_coincident(entry.rooted, at_u, mode);
            long long cv = count_root_coincident(entry.rooted, at_v, mode);
            out.rows.push_back({entry.name, mode, cu, cv, cu != cv});
        }
    return out;
}

}  // namespace recon
