#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

// The eleven code variants. D = dominating, TD = total dominating,
// SEP = separating, ID = identifying, TID = total dominating identifying,
// LD = locating-dominating, TLD = locating-total dominating,
// OLD = open locating-dominating, SID = self-identifying,
// EID = error-correcting identifying, FOURID = (1,<=4)-identifying.
enum class CodeKind { D, TD, SEP, ID, TID, LD, TLD, OLD, SID, EID, FOURID };

constexpr CodeKind all_code_kinds[] = {CodeKind::D,   CodeKind::TD,  CodeKind::SEP, CodeKind::ID,
                                       CodeKind::TID, CodeKind::LD,  CodeKind::TLD, CodeKind::OLD,
                                       CodeKind::SID, CodeKind::EID, CodeKind::FOURID};

std::string code_kind_name(CodeKind kind);
std::optional<CodeKind> code_kind_from_name(const std::string& name);

// I(v) = N[v] ∩ C.
VertexSet iset(const Graph& g, const VertexSet& code, int v);

// I(X) = union of member I-sets; equals N[X] ∩ C.
VertexSet iset_of_set(const Graph& g, const VertexSet& code, const VertexSet& xs);

// One failed requirement, in the fixed deterministic scan order documented
// per kind: coverage/domination by ascending vertex, then pair conditions by
// ascending (u,v); SID scans ordered pairs u-major; FOURID scans subsets by
// (size, lexicographic).
struct Violation {
    enum class Kind {
        UncoveredVertex,
        UndominatedVertex,
        CollidingPair,
        MissingSeparation,   // SID: I(u) \ I(v) empty
        DeficientVertex,     // EID: |I(v)| < 3
        DeficientPair,       // EID: |I(u) xor I(v)| < 3
        CollidingSubsetPair  // FOURID
    };
    Kind kind;
    int u = -1;
    int v = -1;
    std::vector<int> set_a;
    std::vector<int> set_b;
    std::string describe() const;
};

bool is_valid(const Graph& g, CodeKind kind, const VertexSet& code);

std::optional<Violation> violation_witness(const Graph& g, CodeKind kind, const VertexSet& code);

}  // namespace idcodes
