#include "idcodes/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <unordered_set>

#include "idcodes/graph6.hpp"
#include "idcodes/isomorphism.hpp"

namespace idcodes {

namespace {

std::vector<Graph> sorted_by_graph6(std::vector<Graph> graphs) {
    std::sort(graphs.begin(), graphs.end(),
              [](const Graph& a, const Graph& b) { return write_graph6(a) < write_graph6(b); });
    return graphs;
}

// Every connected graph on n vertices arises from a connected graph on n-1
// vertices by adding one vertex with a non-empty neighborhood (delete a
// non-cut vertex, e.g. a spanning-tree leaf). Children are deduplicated by
// canonical key level by level.
std::vector<Graph> build_connected_level(const std::vector<Graph>& parents, int n) {
    std::unordered_set<CanonicalKey> seen;
    std::vector<Graph> out;
    for (const Graph& p : parents) {
        auto base_edges = p.edges();
        for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
            auto edges = base_edges;
            for (int v = 0; v < n - 1; ++v)
                if (mask & (1 << v)) edges.emplace_back(v, n - 1);
            Graph child(n, edges);
            if (seen.insert(canonical_key(child)).second) out.push_back(canonical_form(child));
        }
    }
    return sorted_by_graph6(std::move(out));
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (levels[j] == levels[i] - 1) {
                edges.emplace_back(j, i);
                break;
            }
        }
    }
    return Graph(n, edges);
}

}  // namespace

// Beyer-Hedetniemi successor scan over canonical level sequences, starting
// from the path 1,2,...,n and ending at the star 1,2,2,...,2.
std::vector<std::vector<int>> rooted_level_sequences(int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) return out;
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    while (true) {
        out.push_back(s);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (s[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (s[i] == s[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
    }
    return out;
}

const std::vector<Graph>& enumerate_connected(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_connected: builtin range is 1 <= n <= 7");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (cache.find(1) == cache.end()) cache[1] = {Graph(1, {})};
    for (int k = 2; k <= n; ++k)
        if (cache.find(k) == cache.end()) cache[k] = build_connected_level(cache[k - 1], k);
    return cache[n];
}

const std::vector<Graph>& enumerate_trees(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("enumerate_trees: builtin range is 1 <= n <= 12");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::unordered_set<CanonicalKey> seen;
    std::vector<Graph> out;
    for (const auto& levels : rooted_level_sequences(n)) {
        Graph t = tree_from_level_sequence(levels);
        if (seen.insert(canonical_key(t)).second) out.push_back(canonical_form(t));
    }
    cache[n] = sorted_by_graph6(std::move(out));
    return cache[n];
}

bool StreamFilters::accept(const Graph& g) const {
    if (connected && !is_connected(g)) return false;
    if (trees_only && !is_tree(g)) return false;
    if (identifiable || twin_free || min_girth > 0) {
        StructuralSummary s = structural_summary(g);
        if (identifiable && !s.identifiable) return false;
        if (twin_free && !s.twin_free) return false;
        if (min_girth > 0 && !s.girth_at_least(min_girth)) return false;
    }
    return true;
}

GraphStream GraphStream::builtin_connected(int n_min, int n_max) {
    GraphStream s;
    s.description = "builtin connected n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
    for (int n = n_min; n <= n_max; ++n)
        for (const Graph& g : enumerate_connected(n)) s.graphs.push_back(g);
    return s;
}

GraphStream GraphStream::builtin_trees(int n_min, int n_max) {
    GraphStream s;
    s.description = "builtin trees n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
    for (int n = n_min; n <= n_max; ++n)
        for (const Graph& g : enumerate_trees(n)) s.graphs.push_back(g);
    return s;
}

GraphStream GraphStream::from_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    GraphStream s;
    s.description = "graph6 file " + path;
    s.graphs = read_graph6_stream(in);
    return s;
}

GraphStream GraphStream::from_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    GraphStream s;
    s.description = "edge list file " + path;
    s.graphs.push_back(parse_edge_list(in));
    return s;
}

GraphStream GraphStream::filtered(const StreamFilters& f) const {
    GraphStream s;
    s.description = description;
    for (const Graph& g : graphs)
        if (f.accept(g)) s.graphs.push_back(g);
    return s;
}

}  // namespace idcodes
