#include <doctest.h>

#include "stabilis/generators.hpp"
#include "stabilis/oracle.hpp"
#include "stabilis/sherali_adams.hpp"
#include "support.hpp"

using namespace stabilis;
using namespace stabilis::testing;

TEST_SUITE("sherali_adams") {

TEST_CASE("worked levels") {
    WeightedGraph edge = WeightedGraph::simple(2, {{1, 2}});
    auto [sa1, p1] = sherali_adams_solve(edge, 1);
    CHECK(p1.value == Rational(1));  // level 1 pins the edge to the hull

    WeightedGraph c5 = *fixture_suite("c5").graph;
    auto [sa0, p0] = sherali_adams_solve(c5, 0);
    CHECK(p0.value == Rational(5, 2));  // reduces to the standard LP
    auto [sa2, p2] = sherali_adams_solve(c5, 2);
    CHECK(p2.value == Rational(2));  // treewidth 2: the hull
    CHECK(p2.value == brute_mis(c5).second);
}

TEST_CASE("lifted solution is consistent") {
    WeightedGraph c4 = WeightedGraph::simple(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}},
                                             {{1, Rational(3)}, {3, Rational(2)}});
    auto [sa, proj] = sherali_adams_solve(c4, 2);
    CHECK(sa.y({}) == Rational(1));
    for (int v : c4.vertices()) {
        CHECK(sa.y({v}) == proj.x.at(v));
        CHECK(sa.y({v}) >= Rational(0));
        CHECK(sa.y({v}) <= Rational(1));
    }
    // Edge products vanish at any level >= 1.
    for (auto [u, v] : c4.edges()) CHECK(sa.y({u, v}) == Rational(0));
}

TEST_CASE("level 1 collapses the triangle to its hull") {
    // With Y_uv = 0 on edges, the lifted edge constraints add up to
    // Y_1 + Y_2 + Y_3 <= 1, so level 1 already reaches the integer value.
    auto [sa, proj] = sherali_adams_solve(*fixture_suite("triangle").graph, 1);
    CHECK(proj.value == Rational(1));
}

TEST_CASE("level 2 is exact on unicyclic graphs") {
    Rng rng(409);
    for (int trial = 0; trial < 10; ++trial) {
        // A cycle with pendant trees keeps treewidth 2.
        int c = 3 + static_cast<int>(rng.uniform(3));
        int n = c + static_cast<int>(rng.uniform(4));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v <= c; ++v) edges.emplace_back(v, v % c + 1);
        for (int v = c + 1; v <= n; ++v)
            edges.emplace_back(1 + static_cast<int>(rng.uniform(v - 1)), v);
        WeightedGraph g = WeightedGraph::simple(n, std::move(edges),
                                                random_integer_weights(rng, n, 4));
        auto [sa, proj] = sherali_adams_solve(g, 2);
        CHECK(proj.value == brute_mis(g).second);
    }
}

TEST_CASE("monotone in the level and above the integer optimum") {
    Rng rng(61);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(5));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 3));
        Rational opt = brute_mis(g).second;
        Rational prev;
        for (int t = 0; t <= 2; ++t) {
            auto [sa, proj] = sherali_adams_solve(g, t);
            if (t > 0) CHECK(proj.value <= prev);
            CHECK(proj.value >= opt);
            prev = proj.value;
        }
    }
}

TEST_CASE("budget guard reports the computed size") {
    WeightedGraph g = *fixture_suite("petersen").graph;
    CHECK(sa_constraint_count(g, 1) == (15 + 20) * (1 + 20));
    CHECK_THROWS_AS(sherali_adams_solve(g, 3, /*budget=*/100), LimitError);
}

}  // TEST_SUITE
