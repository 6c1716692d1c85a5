#pragma once

#include <vector>

namespace stabilis {

// Hopcroft-Karp maximum-cardinality bipartite matching. adj[i] lists the
// right-side neighbors of left vertex i (0-based); traversal follows the
// given adjacency order, so results are deterministic.
struct MatchingResult {
    std::size_t size = 0;
    std::vector<int> match_left;   // right partner of left i, -1 if unmatched
    std::vector<int> match_right;  // left partner of right j, -1 if unmatched
};

MatchingResult hopcroft_karp(int n_left, int n_right, const std::vector<std::vector<int>>& adj);

}  // namespace stabilis
