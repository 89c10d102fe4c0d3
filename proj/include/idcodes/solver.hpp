#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idcodes/constraints.hpp"

namespace idcodes {

struct SolveResult {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    int size = 0;
    VertexSet witness;
    std::string infeasibility_reason;
    uint64_t nodes_explored = 0;

    bool optimal() const { return status == Status::Optimal; }
};

// Exact minimum code size by branch-and-bound on the constraint encoding;
// FOURID is solved by iterative-deepening subset search over the predicate
// (guarded at n <= 12).
SolveResult minimum_code(const Graph& g, CodeKind kind);

// Independent brute force: subsets in increasing size, lexicographic within a
// size, first valid wins. Guarded at n <= 20.
SolveResult minimum_code_oracle(const Graph& g, CodeKind kind);

// Every optimum, in lexicographic order of the ascending vertex lists.
// Guarded at n <= 16. Empty when infeasible.
std::vector<VertexSet> all_minimum_codes(const Graph& g, CodeKind kind);

// Size of a minimum code, or absent when the graph admits none.
std::optional<int> parameter(const Graph& g, CodeKind kind);

}  // namespace idcodes
