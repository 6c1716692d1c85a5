#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stabilis/graph.hpp"
#include "stabilis/standard_lp.hpp"

namespace stabilis {

// Exact optimum of the level-t Sherali-Adams relaxation. Assignment is
// keyed by vertex subsets of size <= t+1 (the empty set is pinned to 1).
struct SASolution {
    int level = 0;
    Rational value;
    std::map<std::vector<int>, Rational> assignment;

    const Rational& y(const std::vector<int>& subset) const;
};

// Number of generated constraints: one row per edge and two per vertex for
// every disjoint (S,T) pair with |S|+|T| <= t. Saturates at 2^63.
std::uint64_t sa_constraint_count(const WeightedGraph& g, int level);

constexpr std::uint64_t kDefaultSABudget = 500000;

// Solves the level-t relaxation exactly, returning the full lifted solution
// and its projection y_u = Y_{u}. Throws LimitError when the generated
// constraint count exceeds the budget.
std::pair<SASolution, GraphLPSolution> sherali_adams_solve(
    const WeightedGraph& g, int level, std::uint64_t budget = kDefaultSABudget);

}  // namespace stabilis
