#include <doctest.h>

#include <random>

#include "idcodes/enumerate.hpp"
#include "idcodes/families.hpp"
#include "idcodes/isomorphism.hpp"
#include "oracles.hpp"

using namespace idcodes;

TEST_CASE("simple isomorphism facts") {
    CHECK(is_isomorphic(cycle_graph(4), complete_join(a_k(1), a_k(1))));
    CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(4)));
    CHECK(is_isomorphic(a_k(2), path_graph(4)));
    CHECK(is_isomorphic(Graph(0, {}), Graph(0, {})));
    CHECK(is_isomorphic(Graph(1, {}), Graph(1, {})));
}

TEST_CASE("canonical key is invariant under relabeling") {
    std::mt19937 rng(20240817);
    for (int n = 2; n <= 10; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 2) edges.emplace_back(i, j);
            Graph g(n, edges);
            CanonicalKey key = canonical_key(g);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int round = 0; round < 100; ++round) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_key(apply_permutation(g, perm)) == key);
            }
        }
    }
}

TEST_CASE("canonical form is a relabeling with the same key") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            Graph c = canonical_form(g);
            CHECK(canonical_key(c) == canonical_key(g));
            CHECK(oracles::brute_isomorphic(c, g));
        }
}

TEST_CASE("canonical key agrees with brute-force isomorphism on all pairs at n <= 5") {
    std::vector<Graph> graphs;
    for (int n = 4; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) graphs.push_back(g);
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i; j < graphs.size(); ++j)
            CHECK(is_isomorphic(graphs[i], graphs[j]) == oracles::brute_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("symmetric families canonicalize quickly") {
    CHECK(canonical_key(complete_graph(16)) == canonical_key(complete_graph(16)));
    CHECK(canonical_key(star_graph(12)) == canonical_key(apply_permutation(star_graph(12), {11, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10})));
    CHECK(is_isomorphic(complete_minus_matching(12), family_a({1, 1, 1, 1, 1, 1}, false)));
    CHECK(is_isomorphic(cycle_graph(8), apply_permutation(cycle_graph(8), {3, 4, 5, 6, 7, 0, 1, 2})));
}

TEST_CASE("guard") {
    CHECK_THROWS_AS(canonical_key(Graph(17, {})), std::invalid_argument);
}
