#include "idcodes/isomorphism.hpp"

#include <algorithm>

namespace idcodes {

namespace {

// Canonical labeling by individualization-refinement: refine the ordered
// partition to an equitable one, branch on the first non-singleton cell, and
// take the lexicographically smallest adjacency string over the discrete
// leaves. Candidate branches are pruned through twin transpositions and
// automorphisms discovered at equal-string leaves.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.n()) {}

    std::vector<int> run() {
        if (n_ == 0) return {};
        std::vector<std::vector<int>> cells = {std::vector<int>(n_)};
        for (int v = 0; v < n_; ++v) cells[0][v] = v;
        refine(cells);
        std::vector<int> base;
        search(cells, base);
        return best_perm_;
    }

    const std::vector<uint8_t>& best_string() const { return best_string_; }

private:
    // Split every cell by neighbor counts against every cell until stable.
    // Fragments are ordered by count, so the ordered partition is an
    // isomorphism invariant.
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t si = 0; si < cells.size() && !changed; ++si) {
                VertexSet splitter(n_);
                for (int v : cells[si]) splitter.set(v);
                for (size_t ti = 0; ti < cells.size(); ++ti) {
                    if (cells[ti].size() <= 1) continue;
                    int first_count = g_.open_neighborhood(cells[ti][0]).count_and(splitter);
                    bool uniform = true;
                    for (int v : cells[ti])
                        if (g_.open_neighborhood(v).count_and(splitter) != first_count) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    std::vector<std::pair<int, int>> keyed;  // (count, vertex)
                    keyed.reserve(cells[ti].size());
                    for (int v : cells[ti]) keyed.emplace_back(g_.open_neighborhood(v).count_and(splitter), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    std::vector<std::vector<int>> fragments;
                    for (auto [c, v] : keyed) {
                        if (fragments.empty() || g_.open_neighborhood(fragments.back()[0]).count_and(splitter) != c)
                            fragments.emplace_back();
                        fragments.back().push_back(v);
                    }
                    cells.erase(cells.begin() + ti);
                    cells.insert(cells.begin() + ti, fragments.begin(), fragments.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<uint8_t> adjacency_string(const std::vector<int>& perm) const {
        std::vector<uint8_t> s;
        s.reserve(n_ * (n_ - 1) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) s.push_back(g_.has_edge(perm[i], perm[j]) ? 1 : 0);
        return s;
    }

    bool fixes_all(const std::vector<int>& gamma, const std::vector<int>& base) const {
        for (int v : base)
            if (gamma[v] != v) return false;
        return true;
    }

    bool twins(int u, int v) const {
        if (g_.open_neighborhood(u) == g_.open_neighborhood(v)) return true;
        return g_.closed_neighborhood(u) == g_.closed_neighborhood(v);
    }

    void search(const std::vector<std::vector<int>>& cells, std::vector<int>& base) {
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> perm(n_);
            for (int i = 0; i < n_; ++i) perm[i] = cells[i][0];
            std::vector<uint8_t> s = adjacency_string(perm);
            if (best_perm_.empty() || s < best_string_) {
                best_string_ = std::move(s);
                best_perm_ = perm;
            } else if (s == best_string_ && automorphisms_.size() < kMaxAutomorphisms) {
                // Both labelings realize the same string; their composition
                // is an automorphism usable for pruning.
                std::vector<int> gamma(n_);
                for (int i = 0; i < n_; ++i) gamma[best_perm_[i]] = perm[i];
                automorphisms_.push_back(std::move(gamma));
            }
            return;
        }

        std::vector<int> tried;
        for (int v : cells[target]) {
            bool skip = false;
            for (int u : tried)
                if (twins(u, v)) {
                    skip = true;
                    break;
                }
            if (!skip) {
                for (const auto& gamma : automorphisms_) {
                    if (!fixes_all(gamma, base)) continue;
                    if (std::find(tried.begin(), tried.end(), gamma[v]) != tried.end()) {
                        skip = true;
                        break;
                    }
                }
            }
            if (skip) {
                tried.push_back(v);
                continue;
            }
            std::vector<std::vector<int>> child = cells;
            std::vector<int> rest;
            for (int u : cells[target])
                if (u != v) rest.push_back(u);
            child[target] = {v};
            child.insert(child.begin() + target + 1, rest);
            refine(child);
            base.push_back(v);
            search(child, base);
            base.pop_back();
            tried.push_back(v);
        }
    }

    static constexpr size_t kMaxAutomorphisms = 256;

    const Graph& g_;
    int n_;
    std::vector<int> best_perm_;  // canonical position -> original vertex
    std::vector<uint8_t> best_string_;
    std::vector<std::vector<int>> automorphisms_;
};

void check_guard(const Graph& g) {
    if (g.n() > 16) throw std::invalid_argument("isomorphism: guarded at n <= 16");
}

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
    check_guard(g);
    Canonizer c(g);
    c.run();
    const std::vector<uint8_t>& bits = c.best_string();
    std::string key;
    key.push_back(static_cast<char>(g.n()));
    int acc = 0, filled = 0;
    for (uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++filled == 8) {
            key.push_back(static_cast<char>(acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled) key.push_back(static_cast<char>(acc << (8 - filled)));
    return key;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.n(), edges);
}

Graph canonical_form(const Graph& g) {
    check_guard(g);
    Canonizer c(g);
    std::vector<int> pos_to_vertex = c.run();
    std::vector<int> vertex_to_pos(g.n());
    for (int i = 0; i < g.n(); ++i) vertex_to_pos[pos_to_vertex[i]] = i;
    return apply_permutation(g, vertex_to_pos);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    return canonical_key(g) == canonical_key(h);
}

}  // namespace idcodes
