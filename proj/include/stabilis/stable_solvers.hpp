#pragma once

#include <functional>
#include <optional>

#include "stabilis/graph.hpp"

namespace stabilis {

// Copies-graph purification (bipartite matching on weight-many copies).
// Requires positive integer weights, integer gamma >= 1, I independent.
// Returns the vertices of I with at least one unmatched left copy.
VertexSet purify(const WeightedGraph& g, const VertexSet& i, long gamma,
                 std::size_t copy_edge_limit = 4u << 20);

// Black-box alpha-approximation handle for bounded_alg.
struct ApproxOracle {
    std::function<VertexSet(const WeightedGraph&)> solve;
    Rational alpha{1};
};

ApproxOracle exact_approx_oracle(int limit = 28);  // alpha = 1
ApproxOracle greedy_approx_oracle(const WeightedGraph& g);  // alpha = max(1, Delta)

// ceil(sqrt(2 * Delta * alpha)) with Delta = max(1, max degree of g).
long bounded_alg_gamma(const WeightedGraph& g, const Rational& alpha);

// Purify-and-recurse solver for ceil(sqrt(2*Delta*alpha))-stable instances.
// nullopt = NotStableEvidence: the stability premise was refuted (purify
// came back empty, or the small-weight base case met a surviving edge).
std::optional<VertexSet> bounded_alg(const WeightedGraph& g, const ApproxOracle& approx);

struct Coloring {
    std::map<int, int> color;  // vertex -> color in 1..colors_used
    int colors_used = 0;
    int bound = 0;  // max_i min(d_i + 1, i)
};

// Greedy coloring in non-increasing degree order (ties by id), smallest
// available color; colors_used <= bound always.
Coloring welsh_powell(const WeightedGraph& g);

// Recursive solver for (n/k)-stable instances: greedy at k = 1, otherwise
// LP, then branch on every high-degree vertex and on the low-degree rest.
// Always returns a feasible set; optimal when the threshold exceeds n/k.
VertexSet unbounded_alg(const WeightedGraph& g, int k);

// Robust solver for (Delta-1)-stable instances: exact DP when Delta <= 2,
// otherwise K_{Delta+1} components by heaviest vertex plus the standard LP
// on the rest. nullopt = NotStable; never a wrong answer.
std::optional<VertexSet> robust_bounded_degree(const WeightedGraph& g);

// Exact maximum-weight independent set of a graph with max degree <= 2
// (disjoint paths and cycles), deterministic lexicographic tie-break.
std::pair<VertexSet, Rational> mis_paths_cycles(const WeightedGraph& g);

}  // namespace stabilis
