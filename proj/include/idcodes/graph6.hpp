#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

// Parses one graph6 line. Accepts the optional ">>graph6<<" header and both
// the one-byte (n <= 62) and the 126-prefixed three-byte size field.
Graph parse_graph6(const std::string& line);

std::string write_graph6(const Graph& g);

// Edge-list text: '#' starts a comment, the first data line is "n m",
// followed by m lines "u v" with 0-based endpoints.
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// One graph per non-empty, non-comment line of a graph6 file.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace idcodes
