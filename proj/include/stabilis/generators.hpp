#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stabilis/graph.hpp"
#include "stabilis/multiway_cut.hpp"
#include "stabilis/rng.hpp"

namespace stabilis {

// G(n, 1/2) with a uniformly random k-subset made independent; unit weights.
std::pair<WeightedGraph, VertexSet> planted_instance(int n, int k_planted, std::uint64_t seed);

// Doubles the weights of the current exact optimum until the measured
// stability threshold exceeds target_gamma (returned unchanged when it
// already does). Exact, oracle-verified at every step.
WeightedGraph boost_to_stable(const WeightedGraph& g, const Rational& target_gamma,
                              int limit = 20);

// Erdos-Renyi G(n, p) with the given vertex weights (unit by default);
// shared by the planted generator and the test fixtures.
WeightedGraph random_graph(Rng& rng, int n, const Rational& edge_prob,
                           std::map<int, Rational> weights = {});

// Uniform random integer weights in [1, max_weight].
std::map<int, Rational> random_integer_weights(Rng& rng, int n, long max_weight);
// Random rationals a/b with 1 <= a <= max_num, 1 <= b <= max_den.
std::map<int, Rational> random_rational_weights(Rng& rng, int n, long max_num, long max_den);

// Named deterministic instances (graphs or NMC instances).
struct Fixture {
    std::string name;
    std::optional<WeightedGraph> graph;
    std::optional<NMCInstance> nmc;
};

// Known names: edge-31, path-131, star-2111, triangle, c5, petersen,
// triangle-pendant, k4-heavy, grid-3x3-layered, grid-4x4-layered,
// path-5-layered, matching-tight (underlying path), nmc-gap-3, nmc-star.
Fixture fixture_suite(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace stabilis
