#include "idcodes/constraints.hpp"

namespace idcodes {

bool ConstraintSystem::satisfied_by(const VertexSet& code) const {
    if (!feasible) return false;
    for (const Constraint& c : constraints)
        if (c.support.count_and(code) < c.threshold) return false;
    return true;
}

namespace {

std::string vertex_origin(const char* what, int v) { return std::string(what) + " " + std::to_string(v); }

std::string pair_origin(const char* what, int u, int v) {
    return std::string(what) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void add_vertex_constraints(ConstraintSystem& sys, const Graph& g, bool closed, int threshold,
                            const char* what, const char* infeasible_label) {
    for (int v = 0; v < g.n(); ++v) {
        const VertexSet& s = closed ? g.closed_neighborhood(v) : g.open_neighborhood(v);
        if (s.count() < threshold) {
            sys.feasible = false;
            sys.infeasibility_reason = std::string(infeasible_label) + ": " + vertex_origin(what, v);
            return;
        }
        sys.constraints.push_back({s, threshold, vertex_origin(what, v)});
    }
}

// Closed-neighborhood symmetric differences over unordered pairs.
void add_pair_constraints(ConstraintSystem& sys, const Graph& g, int threshold, const char* what,
                          const char* infeasible_label) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            VertexSet s = g.closed_neighborhood(u) ^ g.closed_neighborhood(v);
            if (s.count() < threshold) {
                sys.feasible = false;
                sys.infeasibility_reason = std::string(infeasible_label) + ": " + pair_origin(what, u, v);
                return;
            }
            sys.constraints.push_back({std::move(s), threshold, pair_origin(what, u, v)});
        }
    }
}

void add_locating_pair_constraints(ConstraintSystem& sys, const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            VertexSet s = g.open_neighborhood(u) ^ g.open_neighborhood(v);
            s.set(u);
            s.set(v);
            sys.constraints.push_back({std::move(s), 1, pair_origin("locating pair", u, v)});
        }
    }
}

void add_open_pair_constraints(ConstraintSystem& sys, const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            VertexSet s = g.open_neighborhood(u) ^ g.open_neighborhood(v);
            if (s.empty()) {
                sys.feasible = false;
                sys.infeasibility_reason = "open twins: " + pair_origin("pair", u, v);
                return;
            }
            sys.constraints.push_back({std::move(s), 1, pair_origin("open pair", u, v)});
        }
    }
}

void add_sid_constraints(ConstraintSystem& sys, const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            VertexSet s = g.closed_neighborhood(u) - g.closed_neighborhood(v);
            if (s.empty()) {
                sys.feasible = false;
                sys.infeasibility_reason =
                    "closed neighborhood of " + std::to_string(u) + " inside that of " + std::to_string(v);
                return;
            }
            sys.constraints.push_back({std::move(s), 1, pair_origin("ordered pair", u, v)});
        }
    }
}

// Drop duplicates and constraints implied by a subset-support constraint with
// an equal or higher threshold. Keeps first occurrences, preserving order.
void normalize(ConstraintSystem& sys) {
    std::vector<Constraint> kept;
    for (const Constraint& c : sys.constraints) {
        bool dominated = false;
        for (const Constraint& k : kept) {
            if (k.threshold >= c.threshold && k.support.is_subset_of(c.support)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(kept, [&](const Constraint& k) {
            return c.threshold >= k.threshold && c.support.is_subset_of(k.support);
        });
        kept.push_back(c);
    }
    sys.constraints = std::move(kept);
}

}  // namespace

ConstraintSystem build_constraints(const Graph& g, CodeKind kind) {
    ConstraintSystem sys;
    sys.n = g.n();
    sys.kind = kind;
    switch (kind) {
        case CodeKind::D:
            add_vertex_constraints(sys, g, true, 1, "vertex", "empty closed neighborhood");
            break;
        case CodeKind::TD:
            add_vertex_constraints(sys, g, false, 1, "vertex", "isolated vertex");
            break;
        case CodeKind::SEP:
            add_pair_constraints(sys, g, 1, "pair", "closed twins");
            break;
        case CodeKind::ID:
            add_vertex_constraints(sys, g, true, 1, "vertex", "empty closed neighborhood");
            if (sys.feasible) add_pair_constraints(sys, g, 1, "pair", "closed twins");
            break;
        case CodeKind::TID:
            add_vertex_constraints(sys, g, false, 1, "vertex", "isolated vertex");
            if (sys.feasible) add_pair_constraints(sys, g, 1, "pair", "closed twins");
            break;
        case CodeKind::LD:
            add_vertex_constraints(sys, g, true, 1, "vertex", "empty closed neighborhood");
            if (sys.feasible) add_locating_pair_constraints(sys, g);
            break;
        case CodeKind::TLD:
            add_vertex_constraints(sys, g, false, 1, "vertex", "isolated vertex");
            if (sys.feasible) add_locating_pair_constraints(sys, g);
            break;
        case CodeKind::OLD:
            add_vertex_constraints(sys, g, false, 1, "vertex", "isolated vertex");
            if (sys.feasible) add_open_pair_constraints(sys, g);
            break;
        case CodeKind::SID:
            add_sid_constraints(sys, g);
            break;
        case CodeKind::EID:
            add_vertex_constraints(sys, g, true, 3, "vertex", "closed neighborhood smaller than 3");
            if (sys.feasible) add_pair_constraints(sys, g, 3, "pair", "symmetric difference smaller than 3");
            break;
        case CodeKind::FOURID:
            sys.reducible = false;
            break;
    }
    if (!sys.feasible) {
        sys.constraints.clear();
        return sys;
    }
    if (sys.reducible) normalize(sys);
    return sys;
}

}  // namespace idcodes
