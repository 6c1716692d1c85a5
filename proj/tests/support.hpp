#pragma once

// Brute-force referees used by the tests. These are deliberately written
// against different machinery than the library paths they check: bitmask
// enumeration instead of the recursive enumerator, a half-integral grid
// scan instead of simplex, and a plain coloring backtracker.

#include <vector>

#include "stabilis/generators.hpp"
#include "stabilis/graph.hpp"
#include "stabilis/rng.hpp"

namespace stabilis::testing {

// Every independent set, by scanning all 2^n vertex subsets.
inline std::vector<VertexSet> brute_independent_sets(const WeightedGraph& g) {
    const auto& ids = g.vertices();
    std::vector<VertexSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (mask & (std::size_t{1} << i)) s.insert(ids[i]);
        if (is_independent(g, s)) out.push_back(s);
    }
    return out;
}

inline std::pair<VertexSet, Rational> brute_mis(const WeightedGraph& g) {
    VertexSet best;
    Rational bw(0);
    for (const auto& s : brute_independent_sets(g)) {
        Rational w = g.weight_of(s);
        if (w > bw || (w == bw && s < best)) {
            best = s;
            bw = w;
        }
    }
    return {best, bw};
}

// Exact optimum of the standard LP by scanning the half-integral grid
// {0, 1/2, 1}^n; valid because the standard MIS polytope is half-integral.
inline Rational brute_standard_lp_value(const WeightedGraph& g) {
    const auto& ids = g.vertices();
    const Rational levels[3] = {Rational(0), Rational(1, 2), Rational(1)};
    std::vector<int> digit(ids.size(), 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < ids.size(); ++i) total *= 3;
    Rational best(0);
    for (std::size_t c = 0; c < total; ++c) {
        bool feasible = true;
        for (auto [u, v] : g.edges()) {
            std::size_t iu = std::lower_bound(ids.begin(), ids.end(), u) - ids.begin();
            std::size_t iv = std::lower_bound(ids.begin(), ids.end(), v) - ids.begin();
            if (levels[digit[iu]] + levels[digit[iv]] > Rational(1)) {
                feasible = false;
                break;
            }
        }
        if (feasible) {
            Rational val;
            for (std::size_t i = 0; i < ids.size(); ++i)
                val += g.weight(ids[i]) * levels[digit[i]];
            if (val > best) best = val;
        }
        for (std::size_t i = ids.size(); i-- > 0;) {
            if (++digit[i] < 3) break;
            digit[i] = 0;
        }
    }
    return best;
}

inline bool colorable_with(const WeightedGraph& g, int k) {
    const auto& ids = g.vertices();
    std::vector<int> color(ids.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == ids.size()) return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int u : g.neighbors(ids[i])) {
                auto it = std::lower_bound(ids.begin(), ids.end(), u);
                std::size_t j = it - ids.begin();
                if (j < i && color[j] == c) ok = false;
            }
            if (!ok) continue;
            color[i] = c;
            if (rec(i + 1)) return true;
            color[i] = 0;
        }
        return false;
    };
    return rec(0);
}

inline int chromatic_number(const WeightedGraph& g) {
    if (g.size() == 0) return 0;
    for (int k = 1;; ++k)
        if (colorable_with(g, k)) return k;
}

// Random connected check helper and degree-bounded random graphs for the
// Berman-Fuerer suite: sample G(n,p) and drop edges at high-degree vertices.
inline WeightedGraph random_bounded_degree_graph(Rng& rng, int n, int max_degree,
                                                 const Rational& edge_prob) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n + 1, 0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (deg[u] < max_degree && deg[v] < max_degree && rng.bernoulli(edge_prob)) {
                edges.emplace_back(u, v);
                ++deg[u];
                ++deg[v];
            }
    return WeightedGraph::simple(n, std::move(edges));
}

}  // namespace stabilis::testing
