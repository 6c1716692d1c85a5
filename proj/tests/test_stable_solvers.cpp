#include <doctest.h>

#include "stabilis/flow.hpp"
#include "stabilis/generators.hpp"
#include "stabilis/matching.hpp"
#include "stabilis/oracle.hpp"
#include "stabilis/stable_solvers.hpp"
#include "support.hpp"

using namespace stabilis;
using namespace stabilis::testing;

TEST_SUITE("stable_solvers") {

TEST_CASE("purify worked examples") {
    WeightedGraph p10 = WeightedGraph::simple(
        3, {{1, 2}, {2, 3}}, {{1, Rational(10)}, {2, Rational(1)}, {3, Rational(10)}});
    CHECK(purify(p10, VertexSet({1}), 2) == VertexSet({1}));

    WeightedGraph single = WeightedGraph::simple(1, {});
    CHECK(purify(single, VertexSet({1}), 1) == VertexSet({1}));

    WeightedGraph e11 = WeightedGraph::simple(2, {{1, 2}});
    CHECK(purify(e11, VertexSet({1}), 1).empty());  // perfect matching eats the copy

    CHECK_THROWS_AS(purify(e11, VertexSet({1, 2}), 1), Error);  // not independent
    WeightedGraph frac = WeightedGraph::simple(2, {{1, 2}}, {{1, Rational(1, 2)}});
    CHECK_THROWS_AS(purify(frac, VertexSet({1}), 1), Error);  // non-integer weight
}

TEST_CASE("purify keeps only optimum vertices on stable instances") {
    Rng rng(97);
    int done = 0;
    for (int trial = 0; done < 12 && trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(7));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 2));
        long gamma = bounded_alg_gamma(g, Rational(1));
        WeightedGraph b = boost_to_stable(g, Rational(gamma));
        StabilityReport rep = stability_threshold(b);
        if (!rep.is_stable(Rational(gamma))) continue;
        ++done;
        VertexSet s = purify(b, rep.optimum, gamma);
        CHECK_FALSE(s.empty());
        CHECK(s.set_minus(rep.optimum).empty());
        // Lemma "a-approx-intersects-opt" with the exact oracle as the
        // 1-approximation is immediate; exercise it with greedy too.
        VertexSet apx = greedy_approx_oracle(b).solve(b);
        CHECK_FALSE(apx.set_intersect(rep.optimum).empty());
        // Lemma "large-opt-bounded-degree", exactly; it carries the
        // section's standing assumption gamma <= Delta.
        long delta = std::max(1, b.max_degree());
        if (gamma <= delta)
            CHECK(rep.optimum_weight > Rational(gamma, 2 * delta) * b.total_weight());
    }
    CHECK(done >= 8);
}

TEST_CASE("hopcroft-karp agrees with unit-capacity max flow") {
    Rng rng(401);
    for (int trial = 0; trial < 30; ++trial) {
        int nl = 1 + static_cast<int>(rng.uniform(7));
        int nr = 1 + static_cast<int>(rng.uniform(7));
        std::vector<std::vector<int>> adj(nl);
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (rng.bernoulli(Rational(2, 5))) adj[i].push_back(j);
        MatchingResult m = hopcroft_karp(nl, nr, adj);
        FlowNetwork net(nl + nr + 2);
        for (int i = 0; i < nl; ++i) net.add_arc(0, 1 + i, Rational(1));
        for (int j = 0; j < nr; ++j) net.add_arc(1 + nl + j, nl + nr + 1, Rational(1));
        for (int i = 0; i < nl; ++i)
            for (int j : adj[i]) net.add_arc(1 + i, 1 + nl + j, Rational(1));
        CHECK(Rational(static_cast<long>(m.size)) == net.max_flow(0, nl + nr + 1));
        // The reported pairing is a matching.
        std::vector<bool> used(nr, false);
        for (int i = 0; i < nl; ++i) {
            if (m.match_left[i] < 0) continue;
            CHECK_FALSE(used[m.match_left[i]]);
            used[m.match_left[i]] = true;
            CHECK(m.match_right[m.match_left[i]] == i);
        }
    }
}

TEST_CASE("bounded_alg worked examples") {
    WeightedGraph p10 = WeightedGraph::simple(
        3, {{1, 2}, {2, 3}}, {{1, Rational(10)}, {2, Rational(1)}, {3, Rational(10)}});
    CHECK(bounded_alg_gamma(p10, Rational(1)) == 2);  // ceil(sqrt(4))
    auto r = bounded_alg(p10, exact_approx_oracle());
    REQUIRE(r.has_value());
    CHECK(*r == VertexSet({1, 3}));

    WeightedGraph single = WeightedGraph::simple(1, {});
    auto rs = bounded_alg(single, exact_approx_oracle());
    REQUIRE(rs.has_value());
    CHECK(*rs == VertexSet({1}));

    // Unstable edge: the stability premise is refuted.
    WeightedGraph e11 = WeightedGraph::simple(2, {{1, 2}});
    CHECK_FALSE(bounded_alg(e11, exact_approx_oracle()).has_value());
}

TEST_CASE("bounded_alg equals the oracle above its stability threshold") {
    Rng rng(101);
    int done = 0;
    for (int trial = 0; done < 12 && trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(8));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 2));
        long gamma = bounded_alg_gamma(g, Rational(1));
        WeightedGraph b = boost_to_stable(g, Rational(gamma));
        if (!stability_threshold(b).is_stable(Rational(gamma))) continue;
        ++done;
        auto r = bounded_alg(b, exact_approx_oracle());
        REQUIRE(r.has_value());
        CHECK(*r == max_independent_set_exact(b).first);
    }
    CHECK(done >= 8);
}

TEST_CASE("welsh_powell worked examples") {
    Coloring s = welsh_powell(*fixture_suite("star-2111").graph);
    CHECK(s.bound == 2);
    CHECK(s.colors_used == 2);

    Coloring t = welsh_powell(*fixture_suite("triangle").graph);
    CHECK(t.bound == 3);
    CHECK(t.colors_used == 3);

    Coloring p = welsh_powell(*fixture_suite("petersen").graph);
    CHECK(p.bound == 4);
    CHECK(p.colors_used <= 4);

    // Proper coloring, always within the bound.
    Rng rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedGraph g = random_graph(rng, 2 + static_cast<int>(rng.uniform(9)), Rational(1, 2));
        Coloring c = welsh_powell(g);
        CHECK(c.colors_used <= c.bound);
        for (auto [u, v] : g.edges()) CHECK(c.color.at(u) != c.color.at(v));
    }
}

TEST_CASE("unbounded_alg worked examples") {
    CHECK(unbounded_alg(*fixture_suite("edge-31").graph, 2) == VertexSet({1}));

    WeightedGraph tri = WeightedGraph::simple(3, {{1, 2}, {1, 3}, {2, 3}}, {{1, Rational(5)}});
    CHECK(unbounded_alg(tri, 3) == VertexSet({1}));

    WeightedGraph c5 = *fixture_suite("c5").graph;
    VertexSet s = unbounded_alg(c5, 5);
    CHECK(is_independent(c5, s));
    CHECK(c5.weight_of(s) >= Rational(2));
}

TEST_CASE("unbounded_alg equals the oracle when threshold > n/k") {
    Rng rng(107);
    for (int k = 1; k <= 3; ++k) {
        int done = 0;
        for (int trial = 0; done < 6 && trial < 40; ++trial) {
            int n = 2 + static_cast<int>(rng.uniform(7));
            WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                           random_integer_weights(rng, n, 3));
            Rational target(static_cast<long>(g.size()), k);
            WeightedGraph b = boost_to_stable(g, target);
            if (!stability_threshold(b).is_stable(target)) continue;
            ++done;
            CHECK(unbounded_alg(b, k) == max_independent_set_exact(b).first);
        }
        CHECK(done >= 4);
    }
}

TEST_CASE("paths-and-cycles DP is exact") {
    WeightedGraph c5 = WeightedGraph::simple(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}},
                                             {{1, Rational(5)}});
    auto [set, w] = mis_paths_cycles(c5);
    CHECK(set == VertexSet({1, 3}));
    CHECK(w == Rational(6));

    Rng rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(10));
        WeightedGraph g = random_bounded_degree_graph(rng, n, 2, Rational(1, 2));
        WeightedGraph wg = g.with_weights(random_integer_weights(rng, n, 5));
        auto [s, wt] = mis_paths_cycles(wg);
        CHECK(is_independent(wg, s));
        CHECK(wt == brute_mis(wg).second);
        CHECK(wg.weight_of(s) == wt);
    }
}

TEST_CASE("robust_bounded_degree worked examples and the robust contract") {
    WeightedGraph c5w = WeightedGraph::simple(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}},
                                              {{1, Rational(5)}});
    auto r1 = robust_bounded_degree(c5w);
    REQUIRE(r1.has_value());
    CHECK(*r1 == VertexSet({1, 3}));

    auto r2 = robust_bounded_degree(*fixture_suite("k4-heavy").graph);
    REQUIRE(r2.has_value());
    CHECK(*r2 == VertexSet({1}));

    Rng rng(113);
    for (int trial = 0; trial < 250; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(9));
        WeightedGraph g = random_graph(rng, n, Rational(2, 5),
                                       random_integer_weights(rng, n, 4));
        auto r = robust_bounded_degree(g);
        if (r) {
            CHECK(is_independent(g, *r));
            CHECK(g.weight_of(*r) == brute_mis(g).second);
        }
    }
}

TEST_CASE("robust_bounded_degree answers on (Delta-1)-stable instances") {
    Rng rng(127);
    int done = 0;
    for (int trial = 0; done < 10 && trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform(7));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 3));
        int delta = g.max_degree();
        if (delta < 2) continue;
        Rational target(delta - 1);
        WeightedGraph b = boost_to_stable(g, target);
        if (!stability_threshold(b).is_stable(target)) continue;
        ++done;
        auto r = robust_bounded_degree(b);
        REQUIRE(r.has_value());
        CHECK(b.weight_of(*r) == max_independent_set_exact(b).second);
    }
    CHECK(done >= 6);
}

}  // TEST_SUITE
