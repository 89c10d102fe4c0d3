#include <doctest.h>

#include <random>

#include "idcodes/vertex_set.hpp"

using idcodes::VertexSet;

TEST_CASE("vertex set algebra is exact") {
    VertexSet a(10, {0, 2, 4, 9});
    VertexSet b(10, {2, 3, 9});
    CHECK((a | b).to_vector() == std::vector<int>{0, 2, 3, 4, 9});
    CHECK((a & b).to_vector() == std::vector<int>{2, 9});
    CHECK((a ^ b).to_vector() == std::vector<int>{0, 3, 4});
    CHECK((a - b).to_vector() == std::vector<int>{0, 4});
    CHECK(a.count() == 4);
    CHECK(a.count_and(b) == 2);
    CHECK(a.intersects(b));
    CHECK_FALSE(VertexSet(10, {1}).intersects(b));
}

TEST_CASE("complement respects width") {
    VertexSet a(5, {1, 3});
    CHECK((~a).to_vector() == std::vector<int>{0, 2, 4});
    CHECK((~VertexSet(5)).count() == 5);
    CHECK((~VertexSet::full(5)).empty());

    // widths across a word boundary
    VertexSet wide(130);
    wide.set(0);
    wide.set(64);
    wide.set(129);
    CHECK((~wide).count() == 127);
    CHECK(VertexSet::full(130).count() == 130);
}

TEST_CASE("subset and ordering") {
    VertexSet a(6, {1, 2});
    VertexSet b(6, {1, 2, 5});
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.is_subset_of(a));
    CHECK(a < b);
    CHECK(a == VertexSet(6, {2, 1}));
}

TEST_CASE("next scans set bits in order") {
    VertexSet a(70, {3, 64, 69});
    CHECK(a.next() == 3);
    CHECK(a.next(4) == 64);
    CHECK(a.next(65) == 69);
    CHECK(a.next(70) == -1);
    CHECK(VertexSet(70).next() == -1);
}

TEST_CASE("out-of-range access throws") {
    VertexSet a(4);
    CHECK_THROWS_AS(a.set(4), std::out_of_range);
    CHECK_THROWS_AS(a.test(-1), std::out_of_range);
    CHECK_THROWS_AS(VertexSet(3) | VertexSet(4), std::invalid_argument);
}

TEST_CASE("set algebra agrees with a boolean-vector model across word boundaries") {
    const int width = 130;
    std::mt19937 rng(7);
    auto random_set = [&](std::vector<bool>& model) {
        VertexSet s(width);
        model.assign(width, false);
        for (int v = 0; v < width; ++v)
            if (rng() % 2) {
                s.set(v);
                model[v] = true;
            }
        return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<bool> ma, mb;
        VertexSet a = random_set(ma), b = random_set(mb);
        VertexSet u = a | b, i = a & b, x = a ^ b, d = a - b, c = ~a;
        int count = 0;
        for (int v = 0; v < width; ++v) {
            CHECK(u.test(v) == (ma[v] || mb[v]));
            CHECK(i.test(v) == (ma[v] && mb[v]));
            CHECK(x.test(v) == (ma[v] != mb[v]));
            CHECK(d.test(v) == (ma[v] && !mb[v]));
            CHECK(c.test(v) == !ma[v]);
            count += ma[v];
        }
        CHECK(a.count() == count);
        CHECK(a.count_and(b) == i.count());
        CHECK(d.is_subset_of(a));
    }
}
