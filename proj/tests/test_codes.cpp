#include <doctest.h>

#include "idcodes/codes.hpp"
#include "idcodes/enumerate.hpp"
#include "idcodes/families.hpp"

using namespace idcodes;

TEST_CASE("iset") {
    Graph p3 = path_graph(3);
    CHECK(iset(p3, VertexSet(3, {1}), 0).to_vector() == std::vector<int>{1});
    CHECK(iset(p3, VertexSet(3), 2).empty());

    // A_3 with code x_2..x_6: I(x_1) = {x_2, x_3}
    Graph a3 = a_k(3);
    VertexSet code(6, {1, 2, 3, 4, 5});
    CHECK(iset(a3, code, 0).to_vector() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(iset(a3, code, 6), std::out_of_range);
}

TEST_CASE("iset_of_set") {
    Graph p4 = path_graph(4);
    VertexSet code(4, {1, 2});
    CHECK(iset_of_set(p4, code, VertexSet(4, {0, 3})).to_vector() == std::vector<int>{1, 2});
    CHECK(iset_of_set(p4, code, VertexSet(4, {2})) == iset(p4, code, 2));
    CHECK(iset_of_set(p4, code, VertexSet(4)).empty());
    Graph c5 = cycle_graph(5);
    CHECK(iset_of_set(c5, VertexSet::full(5), VertexSet::full(5)) == VertexSet::full(5));
}

TEST_CASE("is_valid basic facts") {
    Graph p3 = path_graph(3);
    CHECK(is_valid(p3, CodeKind::D, VertexSet::full(3)));
    CHECK(is_valid(p3, CodeKind::D, VertexSet(3, {1})));
    CHECK_FALSE(is_valid(p3, CodeKind::TD, VertexSet(3, {0})));

    // I(0) = I(1) = {0,1}, so {0,1} does not separate P_3
    CHECK_FALSE(is_valid(p3, CodeKind::TID, VertexSet(3, {0, 1})));
    CHECK(is_valid(p3, CodeKind::TID, VertexSet::full(3)));

    // {0,2} identifies P_3, {0,1} does not
    CHECK(is_valid(p3, CodeKind::ID, VertexSet(3, {0, 2})));
    CHECK_FALSE(is_valid(p3, CodeKind::ID, VertexSet(3, {0, 1})));

    // four consecutive vertices identify and totally dominate C_6
    Graph c6 = cycle_graph(6);
    CHECK(is_valid(c6, CodeKind::TID, VertexSet(6, {0, 1, 2, 3})));
    CHECK_FALSE(is_valid(c6, CodeKind::TID, VertexSet(6, {0, 1, 3, 4})));
}

TEST_CASE("violation witnesses are deterministic") {
    Graph p3 = path_graph(3);
    auto w = violation_witness(p3, CodeKind::TID, VertexSet(3, {0, 1}));
    REQUIRE(w.has_value());
    CHECK(w->kind == Violation::Kind::CollidingPair);
    CHECK(w->u == 0);
    CHECK(w->v == 1);
    CHECK(w->describe() == "colliding pair (0,1)");

    CHECK_FALSE(violation_witness(cycle_graph(6), CodeKind::TID, VertexSet(6, {0, 1, 2, 3})).has_value());

    auto und = violation_witness(path_graph(4), CodeKind::TD, VertexSet(4));
    REQUIRE(und.has_value());
    CHECK(und->kind == Violation::Kind::UndominatedVertex);
    CHECK(und->u == 0);

    auto unc = violation_witness(path_graph(4), CodeKind::D, VertexSet(4));
    REQUIRE(unc.has_value());
    CHECK(unc->kind == Violation::Kind::UncoveredVertex);
    CHECK(unc->u == 0);
}

TEST_CASE("EID checks the vertex condition before pairs") {
    Graph c6 = cycle_graph(6);
    auto w = violation_witness(c6, CodeKind::EID, VertexSet(6, {0, 1}));
    REQUIRE(w.has_value());
    CHECK(w->kind == Violation::Kind::DeficientVertex);
    CHECK(w->u == 0);
}

TEST_CASE("FOURID includes the empty set, so uncovered subsets collide with it") {
    Graph p3 = path_graph(3);
    auto w = violation_witness(p3, CodeKind::FOURID, VertexSet(3));
    REQUIRE(w.has_value());
    CHECK(w->kind == Violation::Kind::CollidingSubsetPair);
    CHECK(w->set_a.empty());  // the empty set collides with the first uncovered singleton
    CHECK(w->set_b == std::vector<int>{0});

    // K_1 with itself as code is a valid 4ID code
    CHECK(is_valid(Graph(1, {}), CodeKind::FOURID, VertexSet::full(1)));
}

TEST_CASE("SID scans ordered pairs") {
    // K_2: N[0] inside N[1], never self-identifying
    Graph k2 = complete_graph(2);
    auto w = violation_witness(k2, CodeKind::SID, VertexSet::full(2));
    REQUIRE(w.has_value());
    CHECK(w->kind == Violation::Kind::MissingSeparation);
    CHECK(w->u == 0);
    CHECK(w->v == 1);
}

TEST_CASE("upward closure: supersets of valid codes stay valid") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                VertexSet code(n);
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) code.set(v);
                for (CodeKind kind : all_code_kinds) {
                    if (!is_valid(g, kind, code)) continue;
                    for (int extra = 0; extra < n; ++extra) {
                        VertexSet bigger = code;
                        bigger.set(extra);
                        CHECK(is_valid(g, kind, bigger));
                    }
                }
            }
        }
    }
}

TEST_CASE("every separating code misses at most one vertex's coverage") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                VertexSet code(n);
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) code.set(v);
                if (!is_valid(g, CodeKind::SEP, code)) continue;
                int uncovered = 0;
                for (int v = 0; v < n; ++v)
                    if (iset(g, code, v).empty()) ++uncovered;
                CHECK(uncovered <= 1);
                CHECK(is_valid(g, CodeKind::ID, code) == (uncovered == 0));
            }
        }
    }
}

TEST_CASE("existence characterizations at small n") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            StructuralSummary s = structural_summary(g);
            bool sep_exists = is_valid(g, CodeKind::SEP, VertexSet::full(n));
            CHECK(sep_exists == s.identifiable);
            bool td_exists = is_valid(g, CodeKind::TD, VertexSet::full(n));
            bool min_degree_one = true;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 0) min_degree_one = false;
            CHECK(td_exists == min_degree_one);
        }
    }
}
