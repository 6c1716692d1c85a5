#include <doctest.h>

#include "stabilis/generators.hpp"
#include "stabilis/multiway_cut.hpp"
#include "stabilis/oracle.hpp"
#include "support.hpp"

using namespace stabilis;
using namespace stabilis::testing;

TEST_SUITE("multiway_cut") {

TEST_CASE("instance validation and file format") {
    NMCInstance star = *fixture_suite("nmc-star").nmc;
    CHECK(star.k() == 2);
    NMCInstance back = parse_nmc(render_nmc(star));
    CHECK(back.graph == star.graph);
    CHECK(back.terminals == star.terminals);

    // Terminals must be non-adjacent.
    CHECK_THROWS_AS(parse_nmc("p nmc 2 1\ne 1 2\nt 1\nt 2\n"), Error);
    // And the graph connected.
    CHECK_THROWS_AS(parse_nmc("p nmc 3 1\ne 1 2\nt 1\nt 3\n"), Error);
}

TEST_CASE("exact solver on the s1-u1-c-u2-s2 star") {
    NMCInstance star = *fixture_suite("nmc-star").nmc;
    NMCExact e = exact_nmc(star);
    CHECK(e.weight == Rational(1));
    CHECK(e.cut.size() == 1);  // {u1}, {u2}, or {c}; lexicographic pick
    CHECK(e.cut == VertexSet({1}));
    CHECK(nmc_feasible(star, e.cut));

    // Simple path s1 - u - s2: the only separator.
    NMCInstance path{WeightedGraph::simple(3, {{2, 1}, {1, 3}}, {{1, Rational(7, 2)}}), {2, 3}};
    path.validate();
    CHECK(exact_nmc(path).weight == Rational(7, 2));
    NMCLPSolution lp = nmc_lp_solve(path);
    CHECK(lp.value == Rational(7, 2));
    CHECK(lp.x.at(1) == Rational(1));
}

TEST_CASE("gap family exact values") {
    NMCInstance gap = gap_instance(3, Rational(1, 2));
    CHECK(gap.graph.weight(3) == Rational(7, 4));   // u_k = k-1-eps/2
    CHECK(gap.graph.weight(4) == Rational(27));     // hub weight k^3

    NMCExact e = exact_nmc(gap);
    CHECK(e.cut == VertexSet({1, 2}));
    CHECK(e.weight == Rational(2));
    REQUIRE(e.threshold.has_value());
    CHECK(*e.threshold == Rational(7, 4));
    CHECK(e.is_stable(Rational(3, 2)));  // k - 1 - eps

    NMCLPSolution lp = nmc_lp_solve(gap);
    CHECK(lp.value == Rational(15, 8));  // k - 1 - eps/4
    CHECK_FALSE(robust_nmc(gap).has_value());

    CHECK(nmc_lp_solve(gap_instance(4, Rational(1, 4))).value == Rational(47, 16));
    CHECK_THROWS_AS(gap_instance(3, Rational(2)), Error);
    CHECK_THROWS_AS(gap_instance(2, Rational(1, 2)), Error);
}

TEST_CASE("half-integral structure of the gap instance") {
    NMCInstance gap = gap_instance(3, Rational(1, 2));
    NMCHalfIntegral h = nmc_half_integral(gap);
    CHECK(h.sol.value == Rational(15, 8));
    CHECK(h.vhalf == VertexSet({1, 2, 3}));       // all spokes at 1/2
    CHECK(h.v0.contains(4));                      // hub at 0
    CHECK(h.v1.empty());
    for (int i = 0; i < 3; ++i) CHECK(h.boundaries[i] == VertexSet({i + 1}));

    // Two disjoint s1 -> s2 paths force both interior vertices to 1.
    NMCInstance twopath{
        WeightedGraph::simple(4, {{3, 1}, {1, 4}, {3, 2}, {2, 4}}), {3, 4}};
    twopath.validate();
    NMCHalfIntegral h2 = nmc_half_integral(twopath);
    CHECK(h2.sol.value == Rational(2));
    CHECK(h2.v1 == VertexSet({1, 2}));
}

TEST_CASE("rounding the gap instance") {
    NMCInstance gap = gap_instance(3, Rational(1, 2));
    NMCHalfIntegral h = nmc_half_integral(gap);
    std::map<int, int> excluded_count;
    Rng base(19);
    const int trials = 3000;
    for (int t = 0; t < trials; ++t) {
        Rng rng = base.derive(t);
        VertexSet x = nmc_round(gap, h, rng);
        CHECK(nmc_feasible(gap, x));
        CHECK(x.size() == 2);  // always two of the three spokes
        for (int u : {1, 2, 3})
            if (!x.contains(u)) ++excluded_count[u];
    }
    // Each spoke is spared with probability 1/3.
    for (int u : {1, 2, 3}) {
        CHECK(excluded_count[u] > trials / 3 - 250);
        CHECK(excluded_count[u] < trials / 3 + 250);
    }
    // A trivial instance with V_1/2 empty rounds deterministically.
    NMCInstance twopath{
        WeightedGraph::simple(4, {{3, 1}, {1, 4}, {3, 2}, {2, 4}}), {3, 4}};
    NMCHalfIntegral h2 = nmc_half_integral(twopath);
    Rng rng(1);
    CHECK(nmc_round(twopath, h2, rng) == VertexSet({1, 2}));
}

TEST_CASE("robust solver on worked instances") {
    NMCInstance path{WeightedGraph::simple(3, {{2, 1}, {1, 3}}), {2, 3}};
    path.validate();
    auto r = robust_nmc(path);
    REQUIRE(r.has_value());
    CHECK(*r == VertexSet({1}));

    // Boosted star: threshold above k-1 forces integrality.
    NMCInstance star = *fixture_suite("nmc-star").nmc;
    NMCInstance boosted = boost_nmc_to_stable(star, Rational(1));
    NMCExact e = exact_nmc(boosted);
    CHECK(e.is_stable(Rational(1)));
    auto rb = robust_nmc(boosted);
    REQUIRE(rb.has_value());
    CHECK(boosted.graph.weight_of(*rb) == e.weight);
}

TEST_CASE("vertex cover reduction") {
    WeightedGraph e31 = *fixture_suite("edge-31").graph;
    NMCInstance red = vc_to_nmc(e31);
    CHECK(red.k() == 2);
    CHECK(exact_nmc(red).weight == Rational(1));  // min VC of the edge

    WeightedGraph tri = *fixture_suite("triangle").graph;
    CHECK(exact_nmc(vc_to_nmc(tri)).weight == Rational(2));
    CHECK(nmc_lp_solve(vc_to_nmc(tri)).value == Rational(3, 2));

    CHECK_THROWS_AS(vc_to_nmc(WeightedGraph::simple(1, {})), Error);

    // Cut weight equals total - MIS weight on random connected graphs.
    Rng rng(173);
    int done = 0;
    for (int trial = 0; done < 15 && trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(6));
        WeightedGraph g = random_graph(rng, n, Rational(3, 5),
                                       random_integer_weights(rng, n, 4));
        if (!g.is_connected()) continue;
        ++done;
        NMCExact e = exact_nmc(vc_to_nmc(g));
        CHECK(e.weight == g.total_weight() - brute_mis(g).second);
    }
    CHECK(done >= 10);
}

}  // TEST_SUITE
