#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "recon/automorphisms.hpp"
#include "recon/counting.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph6.hpp"
#include "recon/identities.hpp"
#include "recon/json_io.hpp"
#include "recon/parallel.hpp"
#include "recon/profile.hpp"
#include "recon/witness.hpp"

// Exit codes: 0 ok, 1 usage or parse error, 2 inconsistency or counterexample
// (for the search suite: no witness matched every check).

namespace {

using namespace recon;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_inconsistent = 2;

// A graph argument is either a literal graph6 string or a path to a file
// whose first non-blank line is one.
Graph load_graph_arg(const std::string& value) {
    if (std::filesystem::exists(value)) {
        std::ifstream in(value);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line);
        throw graph6_error("file " + value + " contains no graph6 line");
    }
    return parse_graph6(value);
}

std::ofstream open_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::ostream& output_or_stdout(std::optional<std::ofstream>& holder, const std::string& path) {
    if (path.empty()) return std::cout;
    holder.emplace(open_output(path));
    return *holder;
}

DeckKind parse_kind(const std::string& word) {
    if (word == "vertex") return DeckKind::vertex;
    if (word == "edge") return DeckKind::edge;
    throw CLI::ValidationError("--kind", "must be vertex or edge");
}

std::string profile_text(const BallProfile& profile) {
    std::ostringstream out;
    out << ">profile " << (profile.kind == DeckKind::vertex ? "vertex" : "edge") << " k="
        << profile.k << " total=" << profile.total() << '\n';
    for (const auto& [key, mult] : profile.entries) {
        out << write_graph6(key.to_graph());
        if (key.kind() == RootKind::vertex) {
            out << " root=" << key.root_vertex();
        } else if (key.kind() == RootKind::edge) {
            auto [a, b] = key.root_edge();
            out << " root=" << a << '-' << b;
        }
        out << " ×" << mult << '\n';
    }
    return out.str();
}

int run_gen(int n, bool connected, const std::string& method_word, const std::string& out_path) {
    GenMethod method = GenMethod::automatic;
    if (method_word == "labeled") method = GenMethod::labeled;
    else if (method_word == "extend") method = GenMethod::extend;
    else if (method_word != "auto") throw CLI::ValidationError("--method", "auto|labeled|extend");
    GraphCatalog catalog = enumerate_graphs(n, connected, method);
    std::optional<std::ofstream> holder;
    write_catalog(catalog, output_or_stdout(holder, out_path));
    std::cerr << "wrote " << catalog.graphs.size() << " graphs of order " << n
              << (connected ? " (connected)" : "") << '\n';
    return exit_ok;
}

int run_deck(const std::string& graph_arg, const std::string& kind_word,
             const std::string& format, const std::string& out_path) {
    Graph g = load_graph_arg(graph_arg);
    Deck d = parse_kind(kind_word) == DeckKind::vertex ? deck(g) : edge_deck(g);
    std::optional<std::ofstream> holder;
    std::ostream& out = output_or_stdout(holder, out_path);
    if (format == "json")
        out << to_json(d).dump(2) << '\n';
    else
        write_deck(d, out);
    return exit_ok;
}

int run_count(const std::string& pattern_arg, const std::string& host_arg,
              const std::string& mode_word, std::optional<int> at,
              std::optional<int> pattern_root, const std::string& pattern_root_edge,
              const std::string& host_root_edge, const std::string& format) {
    Graph pattern = load_graph_arg(pattern_arg);
    Graph host = load_graph_arg(host_arg);
    CountMode mode = mode_word == "induced" ? CountMode::induced : CountMode::subgraph;

    auto parse_edge = [](const std::string& word) {
        auto comma = word.find_first_of(",-");
        if (comma == std::string::npos)
            throw CLI::ValidationError("root edge", "expected two indices like 0,1");
        return std::pair<int, int>{std::stoi(word.substr(0, comma)),
                                   std::stoi(word.substr(comma + 1))};
    };

    CountReport report;
    report.mode = mode;
    if (!pattern_root_edge.empty() || !host_root_edge.empty()) {
        if (pattern_root_edge.empty() || host_root_edge.empty())
            throw CLI::ValidationError("count", "edge-rooted counts need both root edges");
        EdgeRootedGraph f(pattern, parse_edge(pattern_root_edge));
        EdgeRootedGraph g(host, parse_edge(host_root_edge));
        report.pattern = canon_key(f);
        report.host = canon_key(g);
        report.rooted = "root-coincident";
        report.value = count_root_coincident(f, g, mode);
    } else if (pattern_root && at) {
        VertexRootedGraph f(pattern, *pattern_root);
        VertexRootedGraph g(host, *at);
        report.pattern = canon_key(f);
        report.host = canon_key(g);
        report.rooted = "root-coincident";
        report.value = count_root_coincident(f, g, mode);
    } else if (at) {
        report.pattern = canon_key(pattern);
        report.host = canon_key(VertexRootedGraph(host, *at));
        report.rooted = "at-vertex";
        report.value = count_at_vertex(pattern, host, *at, mode);
    } else {
        if (pattern_root)
            throw CLI::ValidationError("count", "--pattern-root needs --at for the host vertex");
        report.pattern = canon_key(pattern);
        report.host = canon_key(host);
        report.rooted = "none";
        report.value = count_copies(pattern, host, mode);
    }

    if (format == "json") {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        std::cout << (mode == CountMode::subgraph ? 's' : 'i') << "(pattern"
                  << (report.rooted == "none" ? "" : ", rooted") << ", host) = " << report.value
                  << '\n';
    }
    return exit_ok;
}

int run_reconstruct(const std::string& deck_path, int k, const std::string& kind_word,
                    const std::string& profile_out, const std::string& trace_out,
                    const std::string& verify_arg, const std::string& format) {
    std::ifstream in(deck_path);
    if (!in) throw std::runtime_error("cannot open deck file: " + deck_path);
    std::optional<DeckKind> expected;
    if (!kind_word.empty()) expected = parse_kind(kind_word);
    Deck d = parse_deck(in, expected);

    std::optional<Graph> truth;
    if (!verify_arg.empty()) truth = load_graph_arg(verify_arg);

    if (truth) {
        Distance r = radius(*truth);
        if (!(r > Distance::of(k))) {
            std::cerr << "warning: precondition violated (radius "
                      << (r.is_infinite() ? std::string("inf") : std::to_string(r.hops()))
                      << " <= k=" << k << "); no profile trusted\n";
            std::cout << "verify: precondition-violated\n";
            return exit_ok;
        }
    }
    if (d.kind() == DeckKind::edge) {
        auto deck_radius = radius_from_edge_deck(d);
        if (deck_radius && *deck_radius <= k)
            std::cerr << "warning: edge deck implies radius " << *deck_radius << " <= k=" << k
                      << "; precondition violated\n";
    }

    try {
        auto [profile, trace] = d.kind() == DeckKind::vertex ? reconstruct_s_profile(d, k)
                                                             : reconstruct_t_profile(d, k);
        std::optional<std::ofstream> holder;
        std::ostream& out = output_or_stdout(holder, profile_out);
        if (format == "json")
            out << to_json(profile).dump(2) << '\n';
        else
            out << profile_text(profile);
        if (!trace_out.empty()) open_output(trace_out) << to_json(trace).dump(2) << '\n';

        if (truth) {
            BallProfile direct = d.kind() == DeckKind::vertex ? s_profile(*truth, k)
                                                              : t_profile(*truth, k);
            bool equal = direct == profile;
            std::cout << "verify: " << (equal ? "equal" : "different") << '\n';
            if (!equal) return exit_inconsistent;
        }
        return exit_ok;
    } catch (const reconstruction_error& e) {
        std::cerr << e.what() << " (offending candidate index " << e.offending << ")\n";
        if (!trace_out.empty()) open_output(trace_out) << to_json(e.trace).dump(2) << '\n';
        return exit_inconsistent;
    }
}

struct SweepScope {
    GraphCatalog catalog;
    std::string label;
};

SweepScope sweep_scope(const std::string& catalog_path, std::optional<int> n, bool connected) {
    if (!catalog_path.empty() && n)
        throw CLI::ValidationError("sweep", "pass either --catalog or --n, not both");
    if (catalog_path.empty() && !n)
        throw CLI::ValidationError("sweep", "pass --catalog FILE or --n N");
    SweepScope scope;
    if (!catalog_path.empty()) {
        scope.catalog = load_catalog(catalog_path);
        scope.label = catalog_path;
    } else {
        scope.catalog = enumerate_graphs(*n, connected);
        scope.label = "n=" + std::to_string(*n);
    }
    return scope;
}

int run_sweep_identities(const SweepScope& scope, unsigned jobs, const std::string& format,
                         std::ostream& out) {
    struct Failure {
        std::string graph6;
        int vertex;
        IdentityRecord record;
    };
    std::vector<std::optional<Failure>> failures(scope.catalog.graphs.size());
    std::vector<json> reports(format == "json" ? scope.catalog.graphs.size() : 0);
    std::atomic<long long> checks{0};

    parallel_for_index(scope.catalog.graphs.size(), jobs, [&](std::size_t idx) {
        const Graph& g = scope.catalog.graphs[idx];
        json vertices = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) {
            json per_vertex = json::array();
            for (const auto& rec : eval_all_identities(g, v)) {
                checks.fetch_add(1);
                if (!rec.holds && !failures[idx]) failures[idx] = Failure{write_graph6(g), v, rec};
                if (!reports.empty()) per_vertex.push_back(to_json(rec));
            }
            if (!reports.empty()) vertices.push_back(json{{"v", v}, {"identities", per_vertex}});
        }
        if (!reports.empty())
            reports[idx] = json{{"graph6", write_graph6(g)}, {"vertices", vertices}};
    });

    if (!reports.empty())
        for (const auto& r : reports) out << r.dump() << '\n';

    long long failed = 0;
    std::optional<Failure> first;
    for (auto& f : failures)
        if (f) {
            ++failed;
            if (!first) first = *f;
        }
    out << "suite=identities scope=" << scope.label << " graphs=" << scope.catalog.graphs.size()
        << " checks=" << checks.load() << " failures=" << failed << '\n';
    if (first) {
        out << "first counterexample: graph " << first->graph6 << " vertex " << first->vertex
            << " identity " << identity_name(first->record.id) << '\n';
        return exit_inconsistent;
    }
    return exit_ok;
}

int run_sweep_roundtrip(const SweepScope& scope, DeckKind kind, unsigned jobs,
                        std::ostream& out) {
    struct Failure {
        std::string graph6;
        int k;
        std::string reason;
    };
    std::vector<std::optional<Failure>> failures(scope.catalog.graphs.size());
    std::atomic<long long> runs{0};
    std::atomic<long long> skipped{0};

    parallel_for_index(scope.catalog.graphs.size(), jobs, [&](std::size_t idx) {
        const Graph& g = scope.catalog.graphs[idx];
        if (!is_connected(g)) {
            skipped.fetch_add(1);
            return;
        }
        Distance r = radius(g);
        int lo = kind == DeckKind::vertex ? 1 : 2;
        for (int k = lo; Distance::of(k) < r; ++k) {
            runs.fetch_add(1);
            try {
                auto [profile, trace] = kind == DeckKind::vertex
                                            ? reconstruct_s_profile(deck(g), k)
                                            : reconstruct_t_profile(edge_deck(g), k);
                BallProfile direct = kind == DeckKind::vertex ? s_profile(g, k) : t_profile(g, k);
                if (!(profile == direct)) {
                    failures[idx] = Failure{write_graph6(g), k, "profile mismatch"};
                    return;
                }
            } catch (const deck_error& e) {
                failures[idx] = Failure{write_graph6(g), k, e.what()};
                return;
            }
        }
    });

    long long failed = 0;
    std::optional<Failure> first;
    for (auto& f : failures)
        if (f) {
            ++failed;
            if (!first) first = *f;
        }
    out << "suite=roundtrip kind=" << (kind == DeckKind::vertex ? "vertex" : "edge")
        << " scope=" << scope.label << " graphs=" << scope.catalog.graphs.size()
        << " reconstructions=" << runs.load() << " skipped_disconnected=" << skipped.load()
        << " failures=" << failed << '\n';
    if (first) {
        out << "first counterexample: graph " << first->graph6 << " k=" << first->k << ": "
            << first->reason << '\n';
        return exit_inconsistent;
    }
    return exit_ok;
}

int run_sweep_search(const SweepScope& scope, DeckKind kind, unsigned jobs, std::ostream& out) {
    auto reports = search_pseudosimilar(scope.catalog, kind, jobs);
    long long full_matches = 0;
    for (const auto& report : reports) {
        if (report.all_checks()) ++full_matches;
        out << to_json(report).dump() << '\n';
    }
    out << "suite=search kind=" << (kind == DeckKind::vertex ? "vertex" : "edge")
        << " scope=" << scope.label << " graphs=" << scope.catalog.graphs.size()
        << " witnesses=" << reports.size() << " full_matches=" << full_matches << '\n';
    return full_matches > 0 ? exit_ok : exit_inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph reconstruction workbench: decks, rooted subgraph counting, and "
                 "ball-profile reconstruction"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a catalog of non-isomorphic graphs");
    int gen_n = 0;
    bool gen_connected = false;
    std::string gen_method = "auto", gen_out;
    gen->add_option("--n", gen_n, "graph order (1..8)")->required();
    gen->add_flag("--connected", gen_connected, "keep connected graphs only");
    gen->add_option("--method", gen_method, "auto|labeled|extend");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* deck_cmd = app.add_subcommand("deck", "write the deck or edge deck of a graph");
    std::string deck_graph, deck_kind = "vertex", deck_format = "text", deck_out;
    deck_cmd->add_option("--g6,--graph", deck_graph, "graph6 string or file")->required();
    deck_cmd->add_option("--kind", deck_kind, "vertex|edge");
    deck_cmd->add_option("--format", deck_format, "text|json");
    deck_cmd->add_option("-o,--output", deck_out, "output file (default stdout)");

    auto* count_cmd = app.add_subcommand("count", "count pattern copies in a host graph");
    std::string count_pattern, count_host, count_mode = "subgraph";
    std::string count_pattern_root_edge, count_host_root_edge, count_format = "text";
    std::optional<int> count_at, count_pattern_root;
    count_cmd->add_option("--pattern", count_pattern, "pattern graph6 or file")->required();
    count_cmd->add_option("--host", count_host, "host graph6 or file")->required();
    count_cmd->add_option("--mode", count_mode, "subgraph|induced");
    count_cmd->add_option("--at", count_at, "host vertex the copies must contain");
    count_cmd->add_option("--pattern-root", count_pattern_root,
                          "pattern root vertex (root-coincident counting, needs --at)");
    count_cmd->add_option("--pattern-root-edge", count_pattern_root_edge,
                          "pattern root edge a,b (edge-rooted counting)");
    count_cmd->add_option("--host-root-edge", count_host_root_edge, "host root edge a,b");
    count_cmd->add_option("--format", count_format, "text|json");

    auto* rec = app.add_subcommand("reconstruct", "reconstruct S_k or T_k from a deck file");
    std::string rec_deck, rec_kind, rec_profile_out, rec_trace_out, rec_verify,
        rec_format = "text";
    int rec_k = 0;
    rec->add_option("--deck", rec_deck, "deck file")->required();
    rec->add_option("--k", rec_k, "ball radius parameter")->required();
    rec->add_option("--kind", rec_kind, "vertex|edge (default: deck header)");
    rec->add_option("--profile-out", rec_profile_out, "profile output file (default stdout)");
    rec->add_option("--trace-out", rec_trace_out, "solve trace JSON output file");
    rec->add_option("--verify", rec_verify, "ground-truth graph6 or file to cross-check");
    rec->add_option("--format", rec_format, "text|json");

    auto* sweep = app.add_subcommand("sweep", "run a suite over a whole catalog");
    std::string sweep_suite, sweep_catalog, sweep_kind = "vertex", sweep_out;
    std::optional<int> sweep_n;
    bool sweep_connected = false;
    unsigned sweep_jobs = 1;
    sweep->add_option("--suite", sweep_suite, "identities|roundtrip|search")->required();
    sweep->add_option("--catalog", sweep_catalog, "graph6 catalog file");
    sweep->add_option("--n", sweep_n, "generate the catalog of this order instead");
    sweep->add_flag("--connected", sweep_connected, "restrict generated catalog to connected");
    sweep->add_option("--kind", sweep_kind, "vertex|edge (roundtrip and search)");
    sweep->add_option("--jobs", sweep_jobs, "worker threads");
    std::string sweep_format = "text";
    sweep->add_option("--format", sweep_format, "text|json (identities suite reports)");
    sweep->add_option("-o,--output", sweep_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);

        if (*gen) return run_gen(gen_n, gen_connected, gen_method, gen_out);
        if (*deck_cmd) return run_deck(deck_graph, deck_kind, deck_format, deck_out);
        if (*count_cmd)
            return run_count(count_pattern, count_host, count_mode, count_at, count_pattern_root,
                             count_pattern_root_edge, count_host_root_edge, count_format);
        if (*rec)
            return run_reconstruct(rec_deck, rec_k, rec_kind, rec_profile_out, rec_trace_out,
                                   rec_verify, rec_format);
        if (*sweep) {
            SweepScope scope = sweep_scope(sweep_catalog, sweep_n, sweep_connected);
            std::optional<std::ofstream> holder;
            std::ostream& out = output_or_stdout(holder, sweep_out);
            if (sweep_suite == "identities")
                return run_sweep_identities(scope, sweep_jobs, sweep_format, out);
            if (sweep_suite == "roundtrip")
                return run_sweep_roundtrip(scope, parse_kind(sweep_kind), sweep_jobs, out);
            if (sweep_suite == "search")
                return run_sweep_search(scope, parse_kind(sweep_kind), sweep_jobs, out);
            throw CLI::ValidationError("--suite", "identities|roundtrip|search");
        }
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const graph6_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const deck_error& e) {
        std::cerr << "deck error: " << e.what() << '\n';
        return exit_inconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
