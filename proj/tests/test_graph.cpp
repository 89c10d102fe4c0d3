#include <doctest.h>

#include "idcodes/enumerate.hpp"
#include "idcodes/families.hpp"
#include "idcodes/graph.hpp"
#include "oracles.hpp"

using namespace idcodes;

TEST_CASE("build_graph checks and normalizes") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(1, 0));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph dup = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{1, 1}}), std::invalid_argument);

    Graph a1 = build_graph(2, {});
    CHECK(a1.edge_count() == 0);
}

TEST_CASE("neighborhoods") {
    Graph p3 = path_graph(3);
    CHECK(p3.open_neighborhood(1).to_vector() == std::vector<int>{0, 2});
    CHECK(p3.closed_neighborhood(1).to_vector() == std::vector<int>{0, 1, 2});

    Graph k4 = complete_graph(4);
    CHECK(k4.open_neighborhood(2).to_vector() == std::vector<int>{0, 1, 3});
    CHECK(k4.closed_neighborhood(2).count() == 4);

    // A_3 adjacency: positions within distance 2
    Graph a3 = a_k(3);
    CHECK(a3.open_neighborhood(0).to_vector() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(a3.open_neighborhood(6), std::out_of_range);
}

TEST_CASE("structural summary basics") {
    StructuralSummary c5 = structural_summary(cycle_graph(5));
    CHECK(c5.connected);
    CHECK(c5.girth == 5);
    CHECK(c5.twin_free);
    CHECK(c5.identifiable);
    CHECK(c5.leaf_count == 0);

    StructuralSummary star = structural_summary(star_graph(4));  // K_{1,3}
    CHECK(star.leaves.to_vector() == std::vector<int>{1, 2, 3});
    CHECK(star.supports.to_vector() == std::vector<int>{0});
    CHECK(star.identifiable);
    CHECK_FALSE(star.twin_free);
    CHECK(star.open_twin_pairs.size() == 3);

    StructuralSummary p2 = structural_summary(path_graph(2));
    CHECK(p2.closed_twin_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK_FALSE(p2.identifiable);

    StructuralSummary tree = structural_summary(path_graph(4));
    CHECK_FALSE(tree.girth.has_value());
    CHECK(tree.girth_at_least(5));

    CHECK(structural_summary(complete_graph(3)).girth == 3);
    CHECK(structural_summary(cycle_graph(4)).girth == 4);
    CHECK_FALSE(structural_summary(build_graph(4, {{0, 1}, {2, 3}})).connected);
}

TEST_CASE("girth at least 5 matches direct triangle and 4-cycle scans") {
    // every graph with n <= 5 (all adjacency matrices)
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask >> bit & 1) edges.emplace_back(i, j);
            Graph g(n, edges);
            bool small_cycle = has_triangle(g) || has_four_cycle(g);
            CHECK(structural_summary(g).girth_at_least(5) == !small_cycle);
        }
    }
    // and every connected class up to n = 7
    for (int n = 6; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            bool small_cycle = has_triangle(g) || has_four_cycle(g);
            CHECK(structural_summary(g).girth_at_least(5) == !small_cycle);
        }
}

namespace {

// Independent girth oracle: for each edge, its shortest cycle is 1 plus the
// shortest path between its endpoints avoiding the edge itself.
std::optional<int> girth_by_edge_removal(const Graph& g) {
    std::optional<int> best;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(g.n(), -1);
        std::vector<int> queue = {u};
        dist[u] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            const VertexSet& nb = g.open_neighborhood(x);
            for (int w = nb.next(); w >= 0; w = nb.next(w + 1)) {
                if ((x == u && w == v) || (x == v && w == u)) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[v] >= 0 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("girth agrees with the edge-removal oracle") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n))
            CHECK(structural_summary(g).girth == girth_by_edge_removal(g));
    CHECK(girth_by_edge_removal(cycle_graph(9)) == 9);
    CHECK(structural_summary(cycle_graph(9)).girth == 9);
}

TEST_CASE("twin-free trees have as many leaves as supports") {
    for (int n = 3; n <= 10; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            StructuralSummary s = structural_summary(t);
            if (s.twin_free) CHECK(s.leaf_count == s.support_count);
        }
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    Graph m = complement(cycle_graph(4));
    CHECK(m.edge_count() == 2);
    CHECK(m.degree(0) == 1);

    // A_2 = P_4 is self-complementary
    CHECK(oracles::brute_isomorphic(complement(a_k(2)), a_k(2)));

    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("complete join") {
    // A_1 join K_1 = P_3
    Graph j = complete_join(a_k(1), Graph(1, {}));
    CHECK(oracles::brute_isomorphic(j, path_graph(3)));

    // A_1 join A_1 = C_4
    CHECK(oracles::brute_isomorphic(complete_join(a_k(1), a_k(1)), cycle_graph(4)));

    // empty join is the identity
    Graph g = cycle_graph(5);
    CHECK(complete_join(Graph(0, {}), g) == g);
    CHECK(complete_join(g, Graph(0, {})) == g);

    // associative up to relabeling
    Graph a = path_graph(2), b = a_k(1), c = path_graph(3);
    CHECK(oracles::brute_isomorphic(complete_join(complete_join(a, b), c),
                                    complete_join(a, complete_join(b, c))));
}

TEST_CASE("attach_leaves") {
    Graph k2 = complete_graph(2);
    Graph p4 = attach_leaves(k2, VertexSet::full(2));
    CHECK(oracles::brute_isomorphic(p4, path_graph(4)));

    Graph star = attach_leaves(path_graph(3), VertexSet(3, {1}));
    CHECK(oracles::brute_isomorphic(star, star_graph(4)));

    Graph same = attach_leaves(path_graph(3), VertexSet(3));
    CHECK(same == path_graph(3));
}

TEST_CASE("induced_delete") {
    CHECK(induced_delete(path_graph(4), VertexSet(4, {3})) == path_graph(3));
    CHECK(induced_delete(star_graph(4), VertexSet(4, {0})).edge_count() == 0);
    CHECK(induced_delete(cycle_graph(5), VertexSet(5)) == cycle_graph(5));
    // re-indexing preserves order
    Graph g = induced_delete(path_graph(5), VertexSet(5, {0}));
    CHECK(g == path_graph(4));
}
