#include <doctest.h>

#include "stabilis/generators.hpp"
#include "stabilis/oracle.hpp"
#include "support.hpp"

using namespace stabilis;
using namespace stabilis::testing;

TEST_SUITE("exact_oracle") {

TEST_CASE("exact MIS on the named fixtures") {
    auto [s1, w1] = max_independent_set_exact(*fixture_suite("edge-31").graph);
    CHECK(s1 == VertexSet({1}));
    CHECK(w1 == Rational(3));

    // C5: the bitmask referee counts 11 independent sets and a max weight of 2.
    WeightedGraph c5 = *fixture_suite("c5").graph;
    auto all = brute_independent_sets(c5);
    CHECK(all.size() == 11);
    auto [s2, w2] = max_independent_set_exact(c5);
    CHECK(w2 == Rational(2));
    CHECK(w2 == brute_mis(c5).second);

    auto [s3, w3] = max_independent_set_exact(*fixture_suite("star-2111").graph);
    CHECK(s3 == VertexSet({2, 3, 4}));
    CHECK(w3 == Rational(3));
}

TEST_CASE("enumerator visits every independent set exactly once") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(9));
        WeightedGraph g = random_graph(rng, n, Rational(2, 5));
        std::vector<VertexSet> seen;
        enumerate_independent_sets(g, [&](const VertexSet& s) { seen.push_back(s); });
        auto expected = brute_independent_sets(g);
        CHECK(seen.size() == expected.size());
        std::sort(seen.begin(), seen.end());
        std::sort(expected.begin(), expected.end());
        CHECK(seen == expected);
    }
}

TEST_CASE("B&B matches the referee with lexicographic ties") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(10));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       trial % 2 ? random_integer_weights(rng, n, 4)
                                                 : std::map<int, Rational>{});
        auto [set, w] = max_independent_set_exact(g);
        auto [bset, bw] = brute_mis(g);
        CHECK(w == bw);
        CHECK(set == bset);
    }
    CHECK_THROWS_AS(max_independent_set_exact(WeightedGraph::simple(3, {}), 2), LimitError);
}

TEST_CASE("stability thresholds on the worked fixtures") {
    auto r1 = stability_threshold(*fixture_suite("edge-31").graph);
    CHECK(*r1.threshold == Rational(3));
    CHECK(*r1.witness == VertexSet({2}));
    CHECK(r1.is_stable(Rational(2)));
    CHECK_FALSE(r1.is_stable(Rational(3)));  // strict

    auto r2 = stability_threshold(*fixture_suite("star-2111").graph);
    CHECK(*r2.threshold == Rational(3, 2));
    CHECK(*r2.witness == VertexSet({1}));

    auto r3 = stability_threshold(WeightedGraph::simple(2, {{1, 2}}));
    CHECK(*r3.threshold == Rational(1));  // two optima

    // Edgeless: every independent set sits inside V = I*.
    auto r4 = stability_threshold(WeightedGraph::simple(3, {}));
    CHECK_FALSE(r4.threshold.has_value());
    CHECK(r4.is_stable(Rational(1000)));
}

TEST_CASE("random perturbations below the threshold keep the optimum") {
    Rng rng(17);
    int done = 0;
    for (int trial = 0; done < 12 && trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(7));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 5));
        StabilityReport rep = stability_threshold(g);
        if (!rep.threshold || *rep.threshold <= Rational(1)) continue;
        ++done;
        // gamma strictly below the threshold: sample random perturbations.
        Rational gamma = (Rational(1) + *rep.threshold) / Rational(2);
        for (int s = 0; s < 100; ++s) {
            Perturbation p;
            p.gamma = gamma;
            for (int v : g.vertices()) {
                // multiplier = 1 + u * (gamma - 1) with u = j/8
                long j = static_cast<long>(rng.uniform(9));
                p.multiplier[v] = Rational(1) + Rational(j, 8) * (gamma - Rational(1));
            }
            auto [opt, w] = max_independent_set_exact(apply_perturbation(g, p));
            CHECK(opt == rep.optimum);
        }
        // At gamma = threshold, boosting the witness's private part ties or beats I*.
        Perturbation worst;
        worst.gamma = *rep.threshold;
        for (int v : rep.witness->set_minus(rep.optimum)) worst.multiplier[v] = *rep.threshold;
        WeightedGraph gw = apply_perturbation(g, worst);
        CHECK(gw.weight_of(*rep.witness) >= gw.weight_of(rep.optimum));
    }
    CHECK(done >= 8);
}

TEST_CASE("verify_certificate worked examples") {
    WeightedGraph path = *fixture_suite("path-131").graph;
    Certificate c;
    c.solution = VertexSet({2});
    c.perturbation.gamma = Rational(2);
    c.perturbation.multiplier[2] = Rational(2);
    CHECK(verify_certificate(path, c, VerifyRoute::Enumerate));
    CHECK(verify_certificate(path, c, VerifyRoute::PerturbedOracle));

    // Ties are allowed: the condition is non-strict.
    WeightedGraph e11 = WeightedGraph::simple(2, {{1, 2}});
    Certificate tie;
    tie.solution = VertexSet({1});
    tie.perturbation.gamma = Rational(1);
    CHECK(verify_certificate(e11, tie));

    // The exact optimum is 1-certified with the identity perturbation.
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(8));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 4));
        Certificate opt;
        opt.solution = max_independent_set_exact(g).first;
        opt.perturbation.gamma = Rational(1);
        CHECK(verify_certificate(g, opt));
    }

    // Bound violations are reported distinctly from optimality failures.
    Certificate bad;
    bad.solution = VertexSet({2});
    bad.perturbation.gamma = Rational(2);
    bad.perturbation.multiplier[2] = Rational(3);
    CHECK_THROWS_AS(verify_certificate(path, bad), PerturbationError);
    Certificate weak;
    weak.solution = VertexSet({1});  // weight 1 vs optimum 3
    weak.perturbation.gamma = Rational(1);
    CHECK_FALSE(verify_certificate(path, weak));
}

TEST_CASE("the two verification routes and the inequality agree on canonical certificates") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(8));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 4));
        // Canonical certificate: some maximal independent set boosted by gamma.
        VertexSet s;
        for (int v : g.vertices()) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (s.contains(u)) ok = false;
            if (ok && rng.bernoulli(Rational(2, 3))) s.insert(v);
        }
        Rational gamma(1 + static_cast<long>(rng.uniform(3)));
        Certificate c;
        c.solution = s;
        c.perturbation.gamma = gamma;
        for (int v : s) c.perturbation.multiplier[v] = gamma;
        bool via_enum = verify_certificate(g, c, VerifyRoute::Enumerate);
        bool via_oracle = verify_certificate(g, c, VerifyRoute::PerturbedOracle);
        bool via_inequality = certified_inequality(g, s, gamma);
        CHECK(via_enum == via_oracle);
        CHECK(via_enum == via_inequality);
    }
}

TEST_CASE("deleting inside or outside the optimum preserves stability") {
    // Lemma checks, on boosted instances with a measured threshold.
    Rng rng(41);
    int done = 0;
    for (int trial = 0; done < 10 && trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform(6));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 3));
        Rational gamma(2);
        WeightedGraph b = boost_to_stable(g, gamma);
        StabilityReport rep = stability_threshold(b);
        REQUIRE(rep.is_stable(gamma));
        ++done;
        // delete-points-inside: remove v in I* with its neighborhood.
        for (int v : rep.optimum) {
            WeightedGraph sub = b.induced(b.vertex_set().set_minus(b.closed_neighborhood(v)));
            if (sub.size() == 0) continue;
            StabilityReport sr = stability_threshold(sub);
            CHECK(sr.is_stable(gamma));
            CHECK(sr.optimum == rep.optimum.set_minus(b.closed_neighborhood(v)));
        }
        // stable-delete-point-outside: remove a random X outside I*.
        VertexSet outside = b.vertex_set().set_minus(rep.optimum);
        VertexSet x;
        for (int v : outside)
            if (rng.bernoulli(Rational(1, 2))) x.insert(v);
        WeightedGraph sub = b.induced(b.vertex_set().set_minus(x));
        StabilityReport sr = stability_threshold(sub);
        CHECK(sr.is_stable(gamma));
    }
    CHECK(done >= 6);
}

}  // TEST_SUITE
