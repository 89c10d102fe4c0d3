#pragma once

#include <string>
#include <vector>

#include "idcodes/codes.hpp"
#include "idcodes/graph.hpp"

namespace idcodes {

// Multi-cover requirement: |C ∩ support| >= threshold.
struct Constraint {
    VertexSet support;
    int threshold = 1;
    std::string origin;  // responsible vertex or pair, for diagnostics
};

// Hitting-set encoding of one code kind on one graph. FOURID has no per-pair
// encoding; its system carries reducible=false and no constraints.
struct ConstraintSystem {
    int n = 0;
    CodeKind kind = CodeKind::D;
    bool reducible = true;
    std::vector<Constraint> constraints;
    bool feasible = true;
    std::string infeasibility_reason;

    bool satisfied_by(const VertexSet& code) const;
};

ConstraintSystem build_constraints(const Graph& g, CodeKind kind);

}  // namespace idcodes
