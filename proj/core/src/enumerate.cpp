#include "recon/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "recon/canon.hpp"
#include "recon/graph6.hpp"

namespace recon {

namespace {

constexpr int generation_limit = 8;

void sort_catalog(std::vector<Graph>& graphs) {
    std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
    keyed.reserve(graphs.size());
    for (auto& g : graphs)
        keyed.push_back({{g.edge_count(), write_graph6(g)}, std::move(g)});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    graphs.clear();
    for (auto& [key, g] : keyed) graphs.push_back(std::move(g));
}

std::vector<Graph> labeled_representatives(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t t = 0; t < slots.size(); ++t)
            if (mask >> t & 1) edges.push_back(slots[t]);
        Graph g(n, edges);
        if (canon_key(g).to_graph() == g) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> extended_representatives(int n) {
    if (n == 0) return {Graph(0)};
    std::vector<Graph> smaller =
        n == 1 ? std::vector<Graph>{Graph(0)} : extended_representatives(n - 1);
    std::map<CanonKey, Graph> seen;
    for (const Graph& base : smaller) {
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
            std::vector<std::pair<int, int>> edges = base.edges();
            for (int v = 0; v < n - 1; ++v)
                if (nbrs >> v & 1) edges.emplace_back(v, n - 1);
            Graph g(n, edges);
            CanonKey key = canon_key(g);
            if (!seen.count(key)) {
                Graph rep = key.to_graph();
                seen.emplace(std::move(key), std::move(rep));
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace

GraphCatalog enumerate_graphs(int n, bool connected_only, GenMethod method) {
    if (n < 1) throw std::invalid_argument("catalog order must be at least 1");
    if (n > generation_limit)
        throw std::invalid_argument("built-in generation is limited to order " +
                                    std::to_string(generation_limit) +
                                    "; ingest a graph6 catalog file instead");
    if (method == GenMethod::automatic) method = n <= 6 ? GenMethod::labeled : GenMethod::extend;
    std::vector<Graph> graphs =
        method == GenMethod::labeled ? labeled_representatives(n) : extended_representatives(n);
    if (connected_only)
        std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
    sort_catalog(graphs);
    GraphCatalog catalog;
    catalog.order = n;
    catalog.connected_only = connected_only;
    catalog.source = "generated";
    catalog.graphs = std::move(graphs);
    return catalog;
}

GraphCatalog load_catalog(const std::string& path, bool verify_distinct) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    GraphCatalog catalog;
    catalog.source = path;
    catalog.graphs = read_graph6_lines(in);
    if (catalog.graphs.empty()) throw std::runtime_error("catalog file is empty: " + path);
    catalog.order = catalog.graphs.front().vertex_count();
    for (const Graph& g : catalog.graphs)
        if (g.vertex_count() != catalog.order)
            throw std::runtime_error("catalog mixes graph orders: " + path);
    if (verify_distinct) {
        std::set<CanonKey> keys;
        for (const Graph& g : catalog.graphs)
            if (!keys.insert(canon_key(g)).second)
                throw std::runtime_error("catalog contains isomorphic duplicates: " + path);
    }
    catalog.connected_only =
        std::all_of(catalog.graphs.begin(), catalog.graphs.end(),
                    [](const Graph& g) { return is_connected(g); });
    return catalog;
}

void write_catalog(const GraphCatalog& catalog, std::ostream& out) {
    for (const Graph& g : catalog.graphs) out << write_graph6(g) << '\n';
}

}  // namespace recon
