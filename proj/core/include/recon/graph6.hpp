#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

class graph6_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decode one graph6 line (standard bit-packed upper-triangle format,
/// printable bytes 63..126). An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);

/// Encode a graph as a bare graph6 string (no header, no newline).
std::string write_graph6(const Graph& g);

/// Parse a whole file, one graph per line; blank lines are skipped. Errors
/// carry the 1-based line number.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace recon
