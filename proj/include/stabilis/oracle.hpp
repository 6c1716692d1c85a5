#pragma once

#include <functional>
#include <optional>

#include "stabilis/graph.hpp"

namespace stabilis {

// Enumeration caps for the brute-force referee. The CLI maps
// STABILIS_ORACLE_LIMIT onto these.
struct OracleLimits {
    int mis = 28;        // max_independent_set_exact
    int enumerate = 20;  // full independent-set enumeration
};

// Exact stability analysis of one instance.
// threshold = min over independent S with S \ I* nonempty of
// w(I* \ S) / w(S \ I*); nullopt means no such S exists (infinitely
// stable). The instance is gamma-stable iff threshold > gamma, strictly;
// threshold <= 1 signals a non-unique or unstable optimum.
struct StabilityReport {
    VertexSet optimum;
    Rational optimum_weight;
    std::optional<Rational> threshold;
    std::optional<VertexSet> witness;

    bool is_stable(const Rational& gamma) const {
        return !threshold.has_value() || *threshold > gamma;
    }
};

// Visits every independent set of g exactly once, in a deterministic order
// (recursive include/exclude with max-degree pivoting).
void enumerate_independent_sets(const WeightedGraph& g,
                                const std::function<void(const VertexSet&)>& visit);

// Branch-and-bound maximum-weight independent set; ties broken toward the
// lexicographically smallest vertex list.
std::pair<VertexSet, Rational> max_independent_set_exact(const WeightedGraph& g,
                                                         int limit = OracleLimits{}.mis);

StabilityReport stability_threshold(const WeightedGraph& g,
                                    int limit = OracleLimits{}.enumerate);

enum class VerifyRoute {
    Enumerate,        // check w'(S) >= w'(I) against every independent set I
    PerturbedOracle,  // compare w'(S) to the exact optimum of the perturbed graph
};

// True iff the certificate's perturbation is valid, its solution is
// independent, and the solution is a maximum independent set of the
// perturbed graph. Bound violations throw PerturbationError; optimality
// failures return false.
bool verify_certificate(const WeightedGraph& g, const Certificate& c,
                        VerifyRoute route = VerifyRoute::Enumerate,
                        int limit = OracleLimits{}.mis);

// The perturbation-free equivalent condition:
// gamma * w(S \ I) >= w(I \ S) for every independent set I.
bool certified_inequality(const WeightedGraph& g, const VertexSet& s, const Rational& gamma,
                          int limit = OracleLimits{}.enumerate);

// Strict variant used by gamma-stability (Def. 2):
// w(I* \ S) > gamma * w(S \ I*) for every independent S != I*.
bool is_gamma_stable(const WeightedGraph& g, const Rational& gamma,
                     int limit = OracleLimits{}.enumerate);

}  // namespace stabilis
