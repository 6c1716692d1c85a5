#pragma once

#include <optional>

#include "stabilis/graph.hpp"

namespace stabilis {

struct BFConfig {
    long sigma = 0;  // improvement-size cap; 0 = full-guarantee mode (capped at n)
    int k = 1;       // epsilon = 1/(3k)

    Rational epsilon() const { return Rational(1, 3L * k); }
    // (Delta+1)/3 + epsilon, clamped below at 1 (a multiplier must be >= 1;
    // the clamp only matters for Delta <= 1).
    Rational gamma(int delta) const;
};

// The literature's sigma requirement 32 k Delta^{4k} ceil(log2 n); the
// solver caps it at n, which dominates at desk scale.
mpz_class bf_sigma_formula(int k, int delta, int n);

// First connected X with |X| <= sigma, I xor X independent and larger, in
// canonical enumeration order (grow from minimum-id root); None at a fixed
// point. Unit weights required.
std::optional<VertexSet> find_improvement(const WeightedGraph& g, const VertexSet& i, long sigma);

// Iterate find_improvement to a fixed point starting from `start` (greedy
// when absent); wrap the result with the uniform gamma multiplier.
Certificate bf_solve(const WeightedGraph& g, const BFConfig& cfg,
                     std::optional<VertexSet> start = std::nullopt);

}  // namespace stabilis
