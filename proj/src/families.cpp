#include "idcodes/families.hpp"

namespace idcodes {

Graph a_k(int k) {
    if (k < 0) throw std::invalid_argument("a_k: k must be >= 0");
    int n = 2 * k;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i <= k - 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph family_a(const std::vector<int>& parts, bool with_universal) {
    Graph g(0, {});
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("family_a: parts must be >= 1");
        g = complete_join(g, a_k(p));
    }
    if (with_universal) g = complete_join(g, Graph(1, {}));
    return g;
}

Graph extremal_tid(const std::vector<int>& parts, bool with_universal, int m) {
    if (m < 1) throw std::invalid_argument("extremal_tid: m must be >= 1");
    Graph core = complete_join(family_a(parts, with_universal), complete_graph(m));
    VertexSet clique(core.n());
    for (int v = core.n() - m; v < core.n(); ++v) clique.set(v);
    return attach_leaves(core, clique);
}

Graph corona(const Graph& base, int t) {
    if (base.n() < 1) throw std::invalid_argument("corona: base must be non-empty");
    if (t < 1 || t > 3) throw std::invalid_argument("corona: t must be 1, 2 or 3");
    int b = base.n();
    auto edges = base.edges();
    for (int i = 0; i < b; ++i) {
        int first = b + t * i;
        edges.emplace_back(i, first);
        for (int j = 1; j < t; ++j) edges.emplace_back(first + j - 1, first + j);
    }
    return Graph(b + t * b, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_minus_matching(int n) {
    if (n < 1) throw std::invalid_argument("complete_minus_matching: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(j == i + 1 && i % 2 == 0)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph subdivided_star(int k) {
    if (k < 1) throw std::invalid_argument("subdivided_star: k must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int u = 3 * i + 1;
        edges.emplace_back(0, u);
        edges.emplace_back(u, u + 1);
        edges.emplace_back(u + 1, u + 2);
    }
    edges.emplace_back(0, 3 * k + 1);
    return Graph(3 * k + 2, edges);
}

Graph ld_gap(int k) {
    if (k < 2) throw std::invalid_argument("ld_gap: k must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);  // leaf b_i on a_i
    int next = 2 * k;
    for (int mask = 0; mask < (1 << k); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        int x = next, xp = next + 1, y = next + 2, z = next + 3;
        next += 4;
        for (int i = 0; i < k; ++i) {
            if (mask & (1 << i)) {
                edges.emplace_back(x, i);
                edges.emplace_back(xp, i);
            }
        }
        edges.emplace_back(x, xp);
        edges.emplace_back(x, y);
        edges.emplace_back(z, x);
        edges.emplace_back(z, xp);
        edges.emplace_back(z, y);
    }
    return Graph(next, edges);
}

Graph sid_gap(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("sid_gap: k must be even and >= 4");
    std::vector<std::pair<int, int>> edges;
    auto in_matching = [&](int i, int j) {  // the removed clique matching
        if (i == 0 && j == k - 1) return true;
        return i % 2 == 1 && j == i + 1;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!in_matching(i, j)) edges.emplace_back(i, j);

    std::vector<int> vertex_of_mask(1 << k, -1);
    int next = k;
    for (int mask = 1; mask < (1 << k); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc < 1 || pc > k - 2) continue;
        vertex_of_mask[mask] = next++;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) edges.emplace_back(vertex_of_mask[mask], i);
    }
    int full = (1 << k) - 1;
    for (int mask = 1; mask < (1 << k); ++mask) {
        if (vertex_of_mask[mask] < 0) continue;
        int pc = __builtin_popcount(mask);
        if (pc == 1) {
            // {x_{2i+1}} pairs with {x_{2i+2}}: bit 2i with bit 2i+1
            int bit = __builtin_ctz(mask);
            if (bit % 2 == 0) edges.emplace_back(vertex_of_mask[mask], vertex_of_mask[mask << 1]);
        } else {
            int partner = full ^ mask;
            if (mask < partner) edges.emplace_back(vertex_of_mask[mask], vertex_of_mask[partner]);
        }
    }
    return Graph(next, edges);
}

Graph eid_gap(int k) {
    if (k < 4) throw std::invalid_argument("eid_gap: k must be >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);

    std::vector<bool> excluded(1 << k, false);
    for (int i = 0; i < k; ++i) {
        int mask = 1 << i;
        if (i > 0) mask |= 1 << (i - 1);
        if (i + 1 < k) mask |= 1 << (i + 1);
        excluded[mask] = true;  // closed path neighborhoods carry no vertex
    }
    std::vector<int> vertex_of_mask(1 << k, -1);
    int next = k;
    for (int mask = 1; mask < (1 << k); ++mask) {
        if (excluded[mask]) continue;
        vertex_of_mask[mask] = next++;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) edges.emplace_back(vertex_of_mask[mask], i);
    }
    int w = vertex_of_mask[(1 << k) - 1];
    for (int i = 0; i < k; ++i) edges.emplace_back(w, vertex_of_mask[1 << i]);
    return Graph(next, edges);
}

char tree_status_name(TreeStatus s) {
    switch (s) {
        case TreeStatus::A: return 'A';
        case TreeStatus::B: return 'B';
        case TreeStatus::C: return 'C';
        case TreeStatus::D: return 'D';
    }
    return '?';
}

StatusedTree grow_statused_tree(const std::vector<GrowOp>& ops) {
    using TS = TreeStatus;
    StatusedTree t;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 8; ++i) edges.emplace_back(i, i + 1);
    t.status = {TS::C, TS::A, TS::B, TS::D, TS::D, TS::B, TS::A, TS::C};
    int n = 8;
    for (const GrowOp& op : ops) {
        if (op.attach < 0 || op.attach >= n)
            throw std::invalid_argument("grow_statused_tree: attach vertex out of range");
        TS need = op.phi == 1 ? TS::C : TS::D;
        if (op.phi != 1 && op.phi != 2) throw std::invalid_argument("grow_statused_tree: phi must be 1 or 2");
        if (t.status[op.attach] != need)
            throw std::invalid_argument(std::string("grow_statused_tree: phi") + std::to_string(op.phi) +
                                        " requires a status-" + tree_status_name(need) + " attach vertex");
        std::vector<TS> added = op.phi == 1 ? std::vector<TS>{TS::D, TS::D, TS::B, TS::A, TS::C}
                                            : std::vector<TS>{TS::D, TS::B, TS::A, TS::C};
        edges.emplace_back(op.attach, n);
        for (size_t j = 1; j < added.size(); ++j) edges.emplace_back(n + j - 1, n + j);
        for (TS s : added) t.status.push_back(s);
        n += static_cast<int>(added.size());
    }
    t.tree = Graph(n, edges);
    return t;
}

}  // namespace idcodes
