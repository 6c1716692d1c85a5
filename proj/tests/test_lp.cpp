#include <doctest.h>

#include "stabilis/generators.hpp"
#include "stabilis/lp.hpp"
#include "stabilis/oracle.hpp"
#include "stabilis/standard_lp.hpp"
#include "support.hpp"

using namespace stabilis;
using namespace stabilis::testing;

TEST_SUITE("lp_engine") {

TEST_CASE("simplex basics") {
    LinearProgram lp;
    int x = lp.add_variable("x");
    lp.set_objective(x, Rational(1));
    lp.add_constraint({{x, Rational(1)}}, LinearProgram::Rel::Le, Rational(3, 2));
    LPSolution s = simplex_solve(lp);
    CHECK(s.optimal());
    CHECK(s.value == Rational(3, 2));
    CHECK(s.values[x] == Rational(3, 2));
}

TEST_CASE("simplex statuses and variable transforms") {
    {
        LinearProgram lp;  // infeasible
        int x = lp.add_variable("x");
        lp.add_constraint({{x, Rational(1)}}, LinearProgram::Rel::Le, Rational(-1));
        CHECK(simplex_solve(lp).status == LPStatus::Infeasible);
    }
    {
        LinearProgram lp;  // unbounded
        int x = lp.add_variable("x");
        lp.set_objective(x, Rational(1));
        CHECK(simplex_solve(lp).status == LPStatus::Unbounded);
    }
    {
        LinearProgram lp;  // equality + minimization
        lp.sense = LinearProgram::Sense::Minimize;
        int x = lp.add_variable("x");
        int y = lp.add_variable("y");
        lp.set_objective(x, Rational(2));
        lp.set_objective(y, Rational(3));
        lp.add_constraint({{x, Rational(1)}, {y, Rational(1)}}, LinearProgram::Rel::Eq,
                          Rational(4));
        LPSolution s = simplex_solve(lp);
        CHECK(s.value == Rational(8));
        CHECK(s.values[x] == Rational(4));
    }
    {
        LinearProgram lp;  // free variable, maximize -|shift| style bounds
        int x = lp.add_variable("x", std::nullopt, std::nullopt);
        lp.set_objective(x, Rational(-1));
        lp.add_constraint({{x, Rational(1)}}, LinearProgram::Rel::Ge, Rational(-5));
        LPSolution s = simplex_solve(lp);
        CHECK(s.value == Rational(5));
        CHECK(s.values[x] == Rational(-5));
    }
    {
        LinearProgram lp;  // upper-bounded-only variable (mirrored)
        int x = lp.add_variable("x", std::nullopt, Rational(7));
        lp.set_objective(x, Rational(1));
        CHECK(simplex_solve(lp).value == Rational(7));
    }
}

TEST_CASE("standard LP worked examples, both methods") {
    WeightedGraph tri = *fixture_suite("triangle").graph;
    for (auto m : {LPMethod::Simplex, LPMethod::NemhauserTrotter}) {
        GraphLPSolution s = solve_standard_lp(tri, m);
        CHECK(s.value == Rational(3, 2));
        for (int v : tri.vertices()) CHECK(s.x.at(v) == Rational(1, 2));
    }
    WeightedGraph e31 = *fixture_suite("edge-31").graph;
    for (auto m : {LPMethod::Simplex, LPMethod::NemhauserTrotter}) {
        GraphLPSolution s = solve_standard_lp(e31, m);
        CHECK(s.value == Rational(3));
        CHECK(s.x.at(1) == Rational(1));
        CHECK(s.x.at(2) == Rational(0));
    }
    // Bipartite path: the NT route lands on the integral optimum.
    WeightedGraph p4 = WeightedGraph::simple(4, {{1, 2}, {2, 3}, {3, 4}});
    GraphLPSolution nt = solve_standard_lp(p4, LPMethod::NemhauserTrotter);
    CHECK(nt.value == Rational(2));
    CHECK(nt.integral());
}

TEST_CASE("simplex lands on half-integral vertices of the standard polytope") {
    // Every basic solution of the standard MIS LP is half-integral, so a
    // non-half-integral answer would mean the solver left the vertex set.
    Rng rng(307);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(9));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_rational_weights(rng, n, 7, 4));
        CHECK(solve_standard_lp(g, LPMethod::Simplex).half_integral());
    }
}

TEST_CASE("NT equals simplex and the grid referee on random graphs") {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(8));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       trial % 2 ? random_rational_weights(rng, n, 5, 3)
                                                 : std::map<int, Rational>{});
        GraphLPSolution a = solve_standard_lp(g, LPMethod::Simplex);
        GraphLPSolution b = solve_standard_lp(g, LPMethod::NemhauserTrotter);
        CHECK(a.value == b.value);
        CHECK(b.half_integral());
        CHECK(a.value == brute_standard_lp_value(g));
    }
}

TEST_CASE("robust_solve on the worked examples") {
    auto r1 = robust_solve(*fixture_suite("edge-31").graph);
    REQUIRE(r1.has_value());
    CHECK(*r1 == VertexSet({1}));

    CHECK_FALSE(robust_solve(*fixture_suite("triangle").graph).has_value());

    // Unit C5 has five optima, so any verdict is admissible here; the
    // simplex lands on an integral vertex of the SA(2) optimal face and the
    // answer must then be a true optimum of weight 2.
    WeightedGraph c5 = *fixture_suite("c5").graph;
    auto r2 = robust_solve(c5, Relaxation::sa(2));
    REQUIRE(r2.has_value());
    CHECK(is_independent(c5, *r2));
    CHECK(c5.weight_of(*r2) == Rational(2));
}

TEST_CASE("robust_solve never answers wrong") {
    Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(8));
        WeightedGraph g = random_graph(rng, n, Rational(1, 2),
                                       random_integer_weights(rng, n, 4));
        auto r = robust_solve(g);
        if (r) {
            CHECK(is_independent(g, *r));
            CHECK(g.weight_of(*r) == brute_mis(g).second);
        }
    }
}

TEST_CASE("lp dump names every piece") {
    LinearProgram lp = build_standard_lp(*fixture_suite("edge-31").graph);
    std::string d = lp.dump();
    CHECK(d.find("max:") != std::string::npos);
    CHECK(d.find("x1") != std::string::npos);
    CHECK(d.find("<=") != std::string::npos);
}

}  // TEST_SUITE
