#include "recon/graph6.hpp"

#include <istream>

namespace recon {

namespace {

constexpr int bias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) throw graph6_error("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw graph6_error("byte out of graph6 range");

    std::size_t at = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 4 && text[1] == '~') {
            if (text.size() < 8) throw graph6_error("truncated order header");
            n = 0;
            for (int i = 2; i < 8; ++i) n = n << 6 | (text[static_cast<std::size_t>(i)] - bias);
            at = 8;
        } else {
            if (text.size() < 4) throw graph6_error("truncated order header");
            n = 0;
            for (int i = 1; i < 4; ++i) n = n << 6 | (text[static_cast<std::size_t>(i)] - bias);
            at = 4;
        }
    } else {
        n = text[0] - bias;
        at = 1;
    }
    if (n > Graph::max_order)
        throw graph6_error("graph order " + std::to_string(n) + " exceeds supported maximum " +
                           std::to_string(Graph::max_order));

    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (text.size() - at != need)
        throw graph6_error(text.size() - at < need ? "truncated adjacency data"
                                                   : "trailing data after adjacency bits");

    std::vector<std::pair<int, int>> edges;
    std::size_t t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int group = text[at + t / 6] - bias;
            int shift = 5 - static_cast<int>(t % 6);
            if ((group >> shift) & 1) edges.emplace_back(i, j);
            ++t;
        }
    // padding bits must be zero
    for (; t < need * 6; ++t) {
        int group = text[at + t / 6] - bias;
        int shift = 5 - static_cast<int>(t % 6);
        if ((group >> shift) & 1) throw graph6_error("nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>((n >> 12 & 63) + bias));
        out.push_back(static_cast<char>((n >> 6 & 63) + bias));
        out.push_back(static_cast<char>((n & 63) + bias));
    }
    int acc = 0;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++t % 6 == 0) {
                out.push_back(static_cast<char>(acc + bias));
                acc = 0;
            }
        }
    if (t % 6 != 0) out.push_back(static_cast<char>((acc << (6 - t % 6)) + bias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const graph6_error& e) {
            throw graph6_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace recon
