#include "recon/json_io.hpp"

#include "recon/graph6.hpp"

namespace recon {

using nlohmann::json;

json rooted_key_json(const CanonKey& key) {
    json out;
    out["graph6"] = write_graph6(key.to_graph());
    out["key"] = key.hex();
    switch (key.kind()) {
        case RootKind::none:
            break;
        case RootKind::vertex:
            out["root"] = key.root_vertex();
            break;
        case RootKind::edge: {
            auto [a, b] = key.root_edge();
            out["root_edge"] = json::array({a, b});
            break;
        }
    }
    return out;
}

json to_json(const Deck& d) {
    json cards = json::array();
    for (const auto& [key, mult] : d.cards()) {
        json card = rooted_key_json(key);
        card["multiplicity"] = mult;
        cards.push_back(std::move(card));
    }
    return json{{"kind", d.kind() == DeckKind::vertex ? "vertex" : "edge"},
                {"card_order", d.card_order()},
                {"cards", std::move(cards)}};
}

json to_json(const BallProfile& profile) {
    json entries = json::array();
    for (const auto& [key, mult] : profile.entries) {
        json entry = rooted_key_json(key);
        entry["multiplicity"] = mult;
        entries.push_back(std::move(entry));
    }
    return json{{"kind", profile.kind == DeckKind::vertex ? "vertex" : "edge"},
                {"k", profile.k},
                {"total", profile.total()},
                {"entries", std::move(entries)}};
}

json to_json(const SolveTrace& trace) {
    json rows = json::array();
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        json terms = json::array();
        for (const auto& term : row.subtractions)
            terms.push_back(json{{"index", term.candidate},
                                 {"coeff", term.coeff},
                                 {"multiplicity", term.multiplicity}});
        json r = rooted_key_json(row.key);
        r["index"] = i;
        r["edge_count"] = row.edge_count;
        r["lhs"] = row.lhs;
        r["diagonal"] = row.diagonal;
        r["terms"] = std::move(terms);
        r["multiplicity"] = row.multiplicity;
        rows.push_back(std::move(r));
    }
    return json{{"kind", trace.kind == DeckKind::vertex ? "vertex" : "edge"},
                {"k", trace.k},
                {"rows", std::move(rows)}};
}

json to_json(const CountReport& report) {
    return json{{"pattern", rooted_key_json(report.pattern)},
                {"host", rooted_key_json(report.host)},
                {"mode", report.mode == CountMode::subgraph ? "subgraph" : "induced"},
                {"rooted", report.rooted},
                {"value", report.value}};
}

json to_json(const IdentityRecord& record) {
    json sides = json::array();
    for (const auto& [label, value] : record.sides)
        sides.push_back(json{{"expr", label}, {"value", value}});
    return json{{"identity", identity_name(record.id)},
                {"sides", std::move(sides)},
                {"holds", record.holds}};
}

json to_json(const WitnessReport& report) {
    json out{{"graph6", report.graph6},
             {"kind", report.kind == DeckKind::vertex ? "vertex" : "edge"},
             {"checks", report.checks},
             {"all_checks", report.all_checks()}};
    if (report.kind == DeckKind::vertex)
        out["pair"] = json::array({report.vertex_pair.first, report.vertex_pair.second});
    else
        out["pair"] = json::array(
            {json::array({report.edge_pair.first.first, report.edge_pair.first.second}),
             json::array({report.edge_pair.second.first, report.edge_pair.second.second})});
    return out;
}

json to_json(const PseudoSimilarReport& report) {
    json pairs = json::array();
    if (report.kind == DeckKind::vertex)
        for (const auto& p : report.vertex_pairs)
            pairs.push_back(json{{"pair", json::array({p.a, p.b})},
                                 {"flag", p.similar ? "similar" : "pseudo-similar"}});
    else
        for (const auto& p : report.edge_pairs)
            pairs.push_back(
                json{{"pair", json::array({json::array({p.a.first, p.a.second}),
                                           json::array({p.b.first, p.b.second})})},
                     {"flag", p.similar ? "similar" : "pseudo-similar"}});
    return json{{"kind", report.kind == DeckKind::vertex ? "vertex" : "edge"},
                {"pairs", std::move(pairs)}};
}

json to_json(const NonreconstructibilityReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"entry", row.entry},
                            {"mode", row.mode == CountMode::subgraph ? "subgraph" : "induced"},
                            {"at_u", row.at_u},
                            {"at_v", row.at_v},
                            {"differs", row.differs}});
    return json{{"u", report.u}, {"v", report.v}, {"rows", std::move(rows)}};
}

}  // namespace recon
