#pragma once

#include "stabilis/graph.hpp"

namespace stabilis {

// Weight-greedy maximal independent set: repeatedly take the heaviest
// remaining vertex (smallest id on ties) and delete its closed neighborhood.
VertexSet greedy_solution(const WeightedGraph& g);

// Greedy with its natural certificate: gamma = max(1, max degree),
// multiplier gamma on exactly the solution vertices.
Certificate greedy_certified(const WeightedGraph& g);

// The certificate factor used by modified_greedy for a given degree bound:
// the smallest rational with denominator 1000 that is >= sqrt(d^2 - d + 1).
Rational modified_greedy_gamma(int delta);

// Case-driven variant: commit the heaviest vertex u unless its neighborhood
// is an independent set of delta vertices that outweighs gamma * w(u), in
// which case commit the neighborhood instead. Requires max degree <= delta
// and delta >= 3.
Certificate modified_greedy(const WeightedGraph& g, int delta);

}  // namespace stabilis
