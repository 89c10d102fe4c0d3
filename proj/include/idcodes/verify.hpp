#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idcodes/codes.hpp"
#include "idcodes/enumerate.hpp"
#include "idcodes/graph.hpp"

namespace idcodes {

// One checker per claim. The gadget-formula claims ignore the max-n option
// (their parameters are fixed); girth5-tight is the informational search.
enum class ClaimId {
    Prop21,
    Prop22,
    Thm24,
    Lem31,
    Thm32,
    Cor33,
    Thm34,
    Cor35,
    Thm36,
    Thm41,
    Thm42,
    Thm43,
    Thm44,
    Prop45,
    Prop46,
    Prop47,
    Fig1,
    LogLb,
    Girth5Tight,
};

std::string claim_name(ClaimId claim);
std::optional<ClaimId> claim_from_name(const std::string& name);
std::vector<ClaimId> all_claims();

struct Finding {
    std::string graph6;
    std::string detail;
};

struct Report {
    std::string claim;
    std::string scope;
    long checked = 0;
    long skipped = 0;
    std::vector<Finding> counterexamples;
    std::vector<Finding> findings;  // informational results (tightness search)
    long elapsed_ms = 0;

    bool pass() const { return counterexamples.empty(); }
    std::string to_json() const;
};

struct VerifyOptions {
    std::optional<int> max_n;
    std::optional<std::string> source_file;  // graph6 lines; builtin enumeration when absent
    int jobs = 1;
    bool relaxed_tightness = false;  // girth5-tight: compare against ceil(3n/4)
};

Report verify_claim(ClaimId claim, const VerifyOptions& opts = {});

// Membership test for the extremal characterization: stars K_{1,t} (t>=2),
// the A-star join families with or without a universal vertex, and the
// leafed-clique join construction. Returns the matching case description.
// Guarded at n <= 12.
std::optional<std::string> is_extremal_member(const Graph& g);

// Hierarchy sweep over an explicit implication edge list; used by the
// checker's own mutation test.
Report verify_hierarchy_with_edges(const std::vector<Graph>& graphs,
                                   const std::vector<std::pair<CodeKind, CodeKind>>& edges);

// The implication lattice: (X, Y) meaning every X code is a Y code, with the
// SID -> TID edge applying only where a TID exists (every target is skipped
// on graphs admitting no code of that target kind).
const std::vector<std::pair<CodeKind, CodeKind>>& hierarchy_edges();

}  // namespace idcodes
