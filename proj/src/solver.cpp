#include "idcodes/solver.hpp"

#include <algorithm>
#include <unordered_map>

#include "idcodes/combinatorics.hpp"

namespace idcodes {

namespace {

int ceil_log2(uint64_t x) {
    int k = 0;
    uint64_t p = 1;
    while (p < x) {
        p <<= 1;
        ++k;
    }
    return k;
}

bool implies_separation_and_domination(CodeKind kind) {
    return kind == CodeKind::ID || kind == CodeKind::TID || kind == CodeKind::SID ||
           kind == CodeKind::EID;
}

VertexSet from_indices(int n, const std::vector<int>& xs) {
    VertexSet s(n);
    for (int v : xs) s.set(v);
    return s;
}

class BranchAndBound {
public:
    explicit BranchAndBound(const ConstraintSystem& sys) : sys_(sys), n_(sys.n) {}

    SolveResult run() {
        SolveResult res;
        VertexSet greedy = greedy_cover();
        best_size_ = greedy.count();
        best_ = greedy;
        search(VertexSet(n_), VertexSet(n_));
        res.status = SolveResult::Status::Optimal;
        res.size = best_size_;
        res.witness = best_;
        res.nodes_explored = nodes_;
        return res;
    }

    uint64_t nodes() const { return nodes_; }

    int floor_ = 0;  // global lower bound, e.g. the log2 floor for SEP+D kinds

private:
    // Deterministic greedy multi-cover for the initial incumbent: repeatedly
    // take the vertex lying in the most unsatisfied constraints.
    VertexSet greedy_cover() {
        VertexSet code(n_);
        while (true) {
            std::vector<int> score(n_, 0);
            bool any_unsat = false;
            for (const Constraint& c : sys_.constraints) {
                if (c.support.count_and(code) >= c.threshold) continue;
                any_unsat = true;
                VertexSet candidates = c.support - code;
                for (int v = candidates.next(); v >= 0; v = candidates.next(v + 1)) ++score[v];
            }
            if (!any_unsat) break;
            int pick = 0;
            for (int v = 1; v < n_; ++v)
                if (score[v] > score[pick]) pick = v;
            code.set(pick);
        }
        return code;
    }

    void search(VertexSet in, VertexSet out) {
        ++nodes_;
        // Forced-vertex propagation to fixpoint: a constraint whose undecided
        // support exactly matches its residual need pulls all of it in.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Constraint& c : sys_.constraints) {
                int residual = c.threshold - c.support.count_and(in);
                if (residual <= 0) continue;
                VertexSet undecided = (c.support - out) - in;
                int p = undecided.count();
                if (p < residual) return;  // cannot be satisfied
                if (p == residual) {
                    in |= undecided;
                    changed = true;
                }
            }
        }
        int in_count = in.count();
        if (in_count >= best_size_) return;

        // Disjoint-support packing lower bound over unsatisfied constraints.
        int lb = in_count;
        VertexSet used(n_);
        const Constraint* branch_on = nullptr;
        int branch_slack = 0;
        for (const Constraint& c : sys_.constraints) {
            int residual = c.threshold - c.support.count_and(in);
            if (residual <= 0) continue;
            VertexSet undecided = (c.support - out) - in;
            if (!undecided.intersects(used)) {
                lb += residual;
                used |= undecided;
            }
            int slack = undecided.count() - residual;
            if (!branch_on || slack < branch_slack) {
                branch_on = &c;
                branch_slack = slack;
            }
        }
        if (!branch_on) {
            best_size_ = in_count;
            best_ = in;
            return;
        }
        if (std::max(lb, floor_) >= best_size_) return;

        // Include the first remaining support vertex; siblings exclude it.
        int residual = branch_on->threshold - branch_on->support.count_and(in);
        std::vector<int> undecided = ((branch_on->support - out) - in).to_vector();
        VertexSet child_out = out;
        int limit = static_cast<int>(undecided.size()) - residual;
        for (int i = 0; i <= limit; ++i) {
            VertexSet child_in = in;
            child_in.set(undecided[i]);
            search(child_in, child_out);
            child_out.set(undecided[i]);
        }
    }

    const ConstraintSystem& sys_;
    int n_;
    int best_size_ = 0;
    VertexSet best_;
    uint64_t nodes_ = 0;
};

SolveResult solve_fourid(const Graph& g) {
    int n = g.n();
    if (n > 12) throw std::invalid_argument("minimum_code: FOURID guarded at n <= 12");

    // Feasible iff all closed neighborhoods N[X], |X| <= 4, are distinct:
    // I(X) = N[X] ∩ C, so a collision defeats every code.
    std::unordered_map<VertexSet, std::vector<int>, VertexSetHash> seen;
    SolveResult res;
    uint64_t subset_count = 0;
    bool infeasible = false;
    for_each_small_subset(n, 4, [&](const std::vector<int>& xs) {
        if (infeasible) return;
        ++subset_count;
        VertexSet nx(n);
        for (int v : xs) nx |= g.closed_neighborhood(v);
        auto [it, inserted] = seen.emplace(nx, xs);
        if (!inserted) {
            infeasible = true;
            res.infeasibility_reason = "indistinguishable subsets " + from_indices(n, it->second).to_string() +
                                       " and " + from_indices(n, xs).to_string();
        }
    });
    if (infeasible) return res;

    int start = ceil_log2(subset_count);
    SolveResult tid = minimum_code(g, CodeKind::TID);
    if (tid.optimal()) start = std::max(start, tid.size);

    for (int size = start; size <= n; ++size) {
        std::optional<VertexSet> found;
        for_each_combination(n, size, [&](const std::vector<int>& xs) {
            if (found) return;
            ++res.nodes_explored;
            VertexSet code = from_indices(n, xs);
            if (is_valid(g, CodeKind::FOURID, code)) found = code;
        });
        if (found) {
            res.status = SolveResult::Status::Optimal;
            res.size = size;
            res.witness = *found;
            return res;
        }
    }
    res.infeasibility_reason = "no valid code";  // unreachable: V(G) is valid here
    return res;
}

}  // namespace

SolveResult minimum_code(const Graph& g, CodeKind kind) {
    if (kind == CodeKind::FOURID) return solve_fourid(g);
    ConstraintSystem sys = build_constraints(g, kind);
    if (!sys.feasible) {
        SolveResult res;
        res.infeasibility_reason = sys.infeasibility_reason;
        return res;
    }
    BranchAndBound bb(sys);
    if (implies_separation_and_domination(kind)) bb.floor_ = ceil_log2(static_cast<uint64_t>(g.n()) + 1);
    return bb.run();
}

SolveResult minimum_code_oracle(const Graph& g, CodeKind kind) {
    int n = g.n();
    if (n > 20) throw std::invalid_argument("minimum_code_oracle: guarded at n <= 20");
    SolveResult res;
    for (int size = 0; size <= n; ++size) {
        std::optional<VertexSet> found;
        for_each_combination(n, size, [&](const std::vector<int>& xs) {
            if (found) return;
            ++res.nodes_explored;
            VertexSet code = from_indices(n, xs);
            if (is_valid(g, kind, code)) found = code;
        });
        if (found) {
            res.status = SolveResult::Status::Optimal;
            res.size = size;
            res.witness = *found;
            return res;
        }
    }
    res.infeasibility_reason = "no valid code of any size";
    return res;
}

std::vector<VertexSet> all_minimum_codes(const Graph& g, CodeKind kind) {
    int n = g.n();
    if (n > 16) throw std::invalid_argument("all_minimum_codes: guarded at n <= 16");
    SolveResult opt = minimum_code(g, kind);
    std::vector<VertexSet> out;
    if (!opt.optimal()) return out;
    for_each_combination(n, opt.size, [&](const std::vector<int>& xs) {
        VertexSet code = from_indices(n, xs);
        if (is_valid(g, kind, code)) out.push_back(code);
    });
    return out;
}

std::optional<int> parameter(const Graph& g, CodeKind kind) {
    SolveResult res = minimum_code(g, kind);
    if (!res.optimal()) return std::nullopt;
    return res.size;
}

}  // namespace idcodes
