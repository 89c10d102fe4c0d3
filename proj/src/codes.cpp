#include "idcodes/codes.hpp"

#include <functional>
#include <unordered_map>

#include "idcodes/combinatorics.hpp"

namespace idcodes {

std::string code_kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::D: return "d";
        case CodeKind::TD: return "td";
        case CodeKind::SEP: return "sep";
        case CodeKind::ID: return "id";
        case CodeKind::TID: return "tid";
        case CodeKind::LD: return "ld";
        case CodeKind::TLD: return "tld";
        case CodeKind::OLD: return "old";
        case CodeKind::SID: return "sid";
        case CodeKind::EID: return "eid";
        case CodeKind::FOURID: return "4id";
    }
    return "?";
}

std::optional<CodeKind> code_kind_from_name(const std::string& name) {
    for (CodeKind k : all_code_kinds)
        if (code_kind_name(k) == name) return k;
    return std::nullopt;
}

VertexSet iset(const Graph& g, const VertexSet& code, int v) {
    if (code.width() != g.n()) throw std::invalid_argument("iset: code width mismatch");
    return g.closed_neighborhood(v) & code;
}

VertexSet iset_of_set(const Graph& g, const VertexSet& code, const VertexSet& xs) {
    if (xs.width() != g.n()) throw std::invalid_argument("iset_of_set: set width mismatch");
    VertexSet acc(g.n());
    for (int v = xs.next(); v >= 0; v = xs.next(v + 1)) acc |= iset(g, code, v);
    return acc;
}

std::string Violation::describe() const {
    auto list = [](const std::vector<int>& xs) {
        std::string s = "{";
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(xs[i]);
        }
        return s + "}";
    };
    switch (kind) {
        case Kind::UncoveredVertex: return "uncovered vertex " + std::to_string(u);
        case Kind::UndominatedVertex: return "undominated vertex " + std::to_string(u);
        case Kind::CollidingPair:
            return "colliding pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
        case Kind::MissingSeparation:
            return "I(" + std::to_string(u) + ") \\ I(" + std::to_string(v) + ") empty";
        case Kind::DeficientVertex: return "|I(" + std::to_string(u) + ")| < 3";
        case Kind::DeficientPair:
            return "|I(" + std::to_string(u) + ") xor I(" + std::to_string(v) + ")| < 3";
        case Kind::CollidingSubsetPair: return "colliding subsets " + list(set_a) + " vs " + list(set_b);
    }
    return "?";
}

namespace {

using VKind = Violation::Kind;

std::optional<Violation> vertex_fail(VKind kind, int v) {
    Violation w;
    w.kind = kind;
    w.u = v;
    return w;
}

std::optional<Violation> pair_fail(VKind kind, int u, int v) {
    Violation w;
    w.kind = kind;
    w.u = u;
    w.v = v;
    return w;
}

std::optional<Violation> check_dominating(const Graph& g, const VertexSet& code) {
    for (int v = 0; v < g.n(); ++v)
        if (!g.closed_neighborhood(v).intersects(code)) return vertex_fail(VKind::UncoveredVertex, v);
    return std::nullopt;
}

std::optional<Violation> check_total_dominating(const Graph& g, const VertexSet& code) {
    for (int v = 0; v < g.n(); ++v)
        if (!g.open_neighborhood(v).intersects(code)) return vertex_fail(VKind::UndominatedVertex, v);
    return std::nullopt;
}

std::optional<Violation> check_separating(const Graph& g, const VertexSet& code) {
    for (int u = 0; u < g.n(); ++u) {
        VertexSet iu = g.closed_neighborhood(u) & code;
        for (int v = u + 1; v < g.n(); ++v)
            if (iu == (g.closed_neighborhood(v) & code)) return pair_fail(VKind::CollidingPair, u, v);
    }
    return std::nullopt;
}

// Non-codeword pairs must have distinct I-sets.
std::optional<Violation> check_locating(const Graph& g, const VertexSet& code) {
    for (int u = 0; u < g.n(); ++u) {
        if (code.test(u)) continue;
        VertexSet iu = g.closed_neighborhood(u) & code;
        for (int v = u + 1; v < g.n(); ++v) {
            if (code.test(v)) continue;
            if (iu == (g.closed_neighborhood(v) & code)) return pair_fail(VKind::CollidingPair, u, v);
        }
    }
    return std::nullopt;
}

std::optional<Violation> check_open_separating(const Graph& g, const VertexSet& code) {
    for (int u = 0; u < g.n(); ++u) {
        VertexSet iu = g.open_neighborhood(u) & code;
        for (int v = u + 1; v < g.n(); ++v)
            if (iu == (g.open_neighborhood(v) & code)) return pair_fail(VKind::CollidingPair, u, v);
    }
    return std::nullopt;
}

std::optional<Violation> check_self_identifying(const Graph& g, const VertexSet& code) {
    for (int u = 0; u < g.n(); ++u) {
        VertexSet iu = g.closed_neighborhood(u) & code;
        for (int v = 0; v < g.n(); ++v) {
            if (v == u) continue;
            if ((iu - (g.closed_neighborhood(v) & code)).empty())
                return pair_fail(VKind::MissingSeparation, u, v);
        }
    }
    return std::nullopt;
}

std::optional<Violation> check_error_correcting(const Graph& g, const VertexSet& code) {
    for (int v = 0; v < g.n(); ++v)
        if (g.closed_neighborhood(v).count_and(code) < 3) return vertex_fail(VKind::DeficientVertex, v);
    for (int u = 0; u < g.n(); ++u) {
        VertexSet iu = g.closed_neighborhood(u) & code;
        for (int v = u + 1; v < g.n(); ++v)
            if ((iu ^ (g.closed_neighborhood(v) & code)).count() < 3)
                return pair_fail(VKind::DeficientPair, u, v);
    }
    return std::nullopt;
}

// Subsets are scanned in (size, lexicographic) order; the empty set is
// included, so I(X) != I(empty) forces coverage of every nonempty X.
std::optional<Violation> check_four_identifying(const Graph& g, const VertexSet& code) {
    std::unordered_map<VertexSet, std::vector<int>, VertexSetHash> seen;
    std::optional<Violation> found;
    for_each_small_subset(g.n(), 4, [&](const std::vector<int>& xs) {
        if (found) return;
        VertexSet ixs(g.n());
        for (int v : xs) ixs |= g.closed_neighborhood(v) & code;
        auto [it, inserted] = seen.emplace(ixs, xs);
        if (!inserted) {
            Violation w;
            w.kind = VKind::CollidingSubsetPair;
            w.set_a = it->second;
            w.set_b = xs;
            found = w;
        }
    });
    return found;
}

std::optional<Violation> witness(const Graph& g, CodeKind kind, const VertexSet& code) {
    auto first_of = [](std::optional<Violation> a, auto... rest) {
        std::optional<Violation> r = a;
        ((r = r ? r : rest()), ...);
        return r;
    };
    switch (kind) {
        case CodeKind::D: return check_dominating(g, code);
        case CodeKind::TD: return check_total_dominating(g, code);
        case CodeKind::SEP: return check_separating(g, code);
        case CodeKind::ID:
            return first_of(check_dominating(g, code), [&] { return check_separating(g, code); });
        case CodeKind::TID:
            return first_of(check_total_dominating(g, code), [&] { return check_separating(g, code); });
        case CodeKind::LD:
            return first_of(check_dominating(g, code), [&] { return check_locating(g, code); });
        case CodeKind::TLD:
            return first_of(check_total_dominating(g, code), [&] { return check_locating(g, code); });
        case CodeKind::OLD:
            return first_of(check_total_dominating(g, code), [&] { return check_open_separating(g, code); });
        case CodeKind::SID: return check_self_identifying(g, code);
        case CodeKind::EID: return check_error_correcting(g, code);
        case CodeKind::FOURID: return check_four_identifying(g, code);
    }
    return std::nullopt;
}

}  // namespace

bool is_valid(const Graph& g, CodeKind kind, const VertexSet& code) {
    return !violation_witness(g, kind, code).has_value();
}

std::optional<Violation> violation_witness(const Graph& g, CodeKind kind, const VertexSet& code) {
    if (code.width() != g.n()) throw std::invalid_argument("violation_witness: code width mismatch");
    return witness(g, kind, code);
}

}  // namespace idcodes
