#include "idcodes/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace idcodes {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    open_.assign(n_, VertexSet(n_));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n_));
        if (u == v) throw std::invalid_argument("Graph: loop edge at vertex " + std::to_string(u));
        open_[u].set(v);
        open_[v].set(u);
    }
    closed_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
        VertexSet c = open_[v];
        c.set(v);
        closed_.push_back(std::move(c));
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += open_[v].count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = open_[u].next(u + 1); v >= 0; v = open_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }

bool is_connected(const Graph& g) {
    int n = g.n();
    if (n <= 1) return true;
    VertexSet seen(n);
    seen.set(0);
    std::vector<int> stack = {0};
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const VertexSet& nb = g.open_neighborhood(u);
        for (int w = nb.next(); w >= 0; w = nb.next(w + 1)) {
            if (!seen.test(w)) {
                seen.set(w);
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_tree(const Graph& g) { return g.n() >= 1 && is_connected(g) && g.edge_count() == g.n() - 1; }

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        const VertexSet& nu = g.open_neighborhood(u);
        for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1))
            if (nu.intersects(g.open_neighborhood(v))) return true;
    }
    return false;
}

bool has_four_cycle(const Graph& g) {
    // A 4-cycle exists iff two distinct vertices share two common neighbors.
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.open_neighborhood(u).count_and(g.open_neighborhood(v)) >= 2) return true;
    return false;
}

namespace {

// Shortest cycle through BFS cross edges, minimized over all roots.
std::optional<int> girth_scan(const Graph& g) {
    int n = g.n();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const VertexSet& nb = g.open_neighborhood(u);
            for (int w = nb.next(); w >= 0; w = nb.next(w + 1)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace

StructuralSummary structural_summary(const Graph& g) {
    int n = g.n();
    StructuralSummary s;
    s.connected = is_connected(g);
    s.girth = girth_scan(g);
    s.leaves = VertexSet(n);
    s.supports = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) s.leaves.set(v);
    for (int v = s.leaves.next(); v >= 0; v = s.leaves.next(v + 1))
        s.supports.set(g.open_neighborhood(v).next());
    s.leaf_count = s.leaves.count();
    s.support_count = s.supports.count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) s.closed_twin_pairs.emplace_back(u, v);
            if (g.open_neighborhood(u) == g.open_neighborhood(v)) s.open_twin_pairs.emplace_back(u, v);
        }
    }
    s.identifiable = s.closed_twin_pairs.empty();
    s.twin_free = s.identifiable && s.open_twin_pairs.empty();
    return s;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

Graph complete_join(const Graph& g, const Graph& h) {
    int gn = g.n(), hn = h.n();
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + gn, v + gn);
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < hn; ++v) edges.emplace_back(u, v + gn);
    return Graph(gn + hn, edges);
}

Graph attach_leaves(const Graph& g, const VertexSet& targets) {
    if (targets.width() != g.n()) throw std::invalid_argument("attach_leaves: target width mismatch");
    auto edges = g.edges();
    int next = g.n();
    for (int t = targets.next(); t >= 0; t = targets.next(t + 1)) edges.emplace_back(t, next++);
    return Graph(next, edges);
}

Graph induced_delete(const Graph& g, const VertexSet& removed) {
    if (removed.width() != g.n()) throw std::invalid_argument("induced_delete: width mismatch");
    std::vector<int> relabel(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!removed.test(v)) relabel[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
    return Graph(next, edges);
}

}  // namespace idcodes
