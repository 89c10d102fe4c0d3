#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

// All connected graphs on n vertices, one canonical representative per
// isomorphism class, sorted by graph6 string. Builtin range 1 <= n <= 7.
const std::vector<Graph>& enumerate_connected(int n);

// All free trees on n vertices up to isomorphism, canonical representatives
// sorted by graph6 string. Builtin range 1 <= n <= 12.
const std::vector<Graph>& enumerate_trees(int n);

// Rooted-tree level sequences in Beyer-Hedetniemi order; exposed for the
// tree enumerator's tests.
std::vector<std::vector<int>> rooted_level_sequences(int n);

// Predicate filters applied on top of any source.
struct StreamFilters {
    bool connected = false;
    bool identifiable = false;
    bool twin_free = false;
    int min_girth = 0;  // acyclic graphs pass every threshold
    bool trees_only = false;

    bool accept(const Graph& g) const;
};

// A materialized sequence of graphs with a human-readable description of
// where it came from.
struct GraphStream {
    std::string description;
    std::vector<Graph> graphs;

    static GraphStream builtin_connected(int n_min, int n_max);
    static GraphStream builtin_trees(int n_min, int n_max);
    static GraphStream from_graph6_file(const std::string& path);
    static GraphStream from_edge_list_file(const std::string& path);

    GraphStream filtered(const StreamFilters& f) const;
};

}  // namespace idcodes
