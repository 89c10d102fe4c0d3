#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "idcodes/vertex_set.hpp"

namespace idcodes {

// Immutable simple undirected graph. Vertices are 0..n-1; adjacency is kept
// as one open-neighborhood bit row per vertex (symmetric, irreflexive).
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return open_[check(u)].test(check(v)); }
    int degree(int v) const { return open_[check(v)].count(); }

    const VertexSet& open_neighborhood(int v) const { return open_[check(v)]; }
    const VertexSet& closed_neighborhood(int v) const { return closed_[check(v)]; }

    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && open_ == o.open_; }

private:
    int check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
        return v;
    }

    int n_;
    std::vector<VertexSet> open_;
    std::vector<VertexSet> closed_;
};

// Leaf/support/twin/girth summary used by the family recognizers and the
// bound checkers.
struct StructuralSummary {
    bool connected = false;
    std::optional<int> girth;  // nullopt when acyclic
    VertexSet leaves;
    VertexSet supports;
    int leaf_count = 0;
    int support_count = 0;
    std::vector<std::pair<int, int>> closed_twin_pairs;
    std::vector<std::pair<int, int>> open_twin_pairs;
    bool identifiable = false;  // no closed twins
    bool twin_free = false;     // neither kind of twin

    // Acyclic graphs pass every girth threshold.
    bool girth_at_least(int g) const { return !girth.has_value() || *girth >= g; }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

StructuralSummary structural_summary(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool has_triangle(const Graph& g);
bool has_four_cycle(const Graph& g);

Graph complement(const Graph& g);
Graph complete_join(const Graph& g, const Graph& h);
Graph attach_leaves(const Graph& g, const VertexSet& targets);
Graph induced_delete(const Graph& g, const VertexSet& removed);

}  // namespace idcodes
