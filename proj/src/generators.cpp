#include "stabilis/generators.hpp"

#include <algorithm>

#include "stabilis/oracle.hpp"

namespace stabilis {

WeightedGraph random_graph(Rng& rng, int n, const Rational& edge_prob,
                           std::map<int, Rational> weights) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.bernoulli(edge_prob)) edges.emplace_back(u, v);
    return WeightedGraph::simple(n, std::move(edges), std::move(weights));
}

std::map<int, Rational> random_integer_weights(Rng& rng, int n, long max_weight) {
    std::map<int, Rational> w;
    for (int v = 1; v <= n; ++v)
        w[v] = Rational(1 + static_cast<long>(rng.uniform(static_cast<std::uint64_t>(max_weight))));
    return w;
}

std::map<int, Rational> random_rational_weights(Rng& rng, int n, long max_num, long max_den) {
    std::map<int, Rational> w;
    for (int v = 1; v <= n; ++v) {
        long num = 1 + static_cast<long>(rng.uniform(static_cast<std::uint64_t>(max_num)));
        long den = 1 + static_cast<long>(rng.uniform(static_cast<std::uint64_t>(max_den)));
        w[v] = Rational(num, den);
    }
    return w;
}

std::pair<WeightedGraph, VertexSet> planted_instance(int n, int k_planted, std::uint64_t seed) {
    if (k_planted < 1 || k_planted > n) throw Error("planted size out of range");
    Rng rng(seed);
    // Uniformly random k-subset by partial Fisher-Yates.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = 0; i < k_planted; ++i) {
        std::uint64_t j = i + rng.uniform(static_cast<std::uint64_t>(n - i));
        std::swap(perm[i], perm[j]);
    }
    VertexSet planted(std::vector<int>(perm.begin(), perm.begin() + k_planted));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            bool coin = rng.bernoulli(Rational(1, 2));
            if (coin && !(planted.contains(u) && planted.contains(v))) edges.emplace_back(u, v);
        }
    WeightedGraph g = WeightedGraph::simple(n, std::move(edges));
    if (!is_independent(g, planted)) throw Error("planted set not independent (internal error)");
    return {std::move(g), std::move(planted)};
}

WeightedGraph boost_to_stable(const WeightedGraph& g, const Rational& target_gamma, int limit) {
    StabilityReport rep = stability_threshold(g, limit);
    if (rep.is_stable(target_gamma)) return g;
    WeightedGraph cur = g;
    VertexSet opt = rep.optimum;
    for (int rounds = 0; rounds < 256; ++rounds) {
        std::map<int, Rational> w;
        for (int v : opt) w[v] = cur.weight(v) * Rational(2);
        cur = cur.with_weights(std::move(w));
        StabilityReport r = stability_threshold(cur, limit);
        if (r.is_stable(target_gamma)) {
            if (r.optimum != opt) throw Error("boost changed the optimum (internal error)");
            return cur;
        }
    }
    throw Error("boost_to_stable failed to converge");
}

namespace {

WeightedGraph petersen() {
    std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                                           {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}};
    return WeightedGraph::simple(10, std::move(edges));
}

WeightedGraph grid(int rows, int cols, bool layered) {
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    std::vector<int> ids(rows * cols);
    for (int i = 0; i < rows * cols; ++i) ids[i] = i + 1;
    std::optional<std::map<int, int>> layers;
    if (layered) {
        layers.emplace();
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                int ring = std::min(std::min(r, c), std::min(rows - 1 - r, cols - 1 - c));
                (*layers)[id(r, c)] = ring;
            }
    }
    return WeightedGraph::build(std::move(ids), std::move(edges), {}, std::move(layers));
}

}  // namespace

Fixture fixture_suite(const std::string& name) {
    Fixture f;
    f.name = name;
    if (name == "edge-31") {
        f.graph = WeightedGraph::simple(2, {{1, 2}}, {{1, Rational(3)}, {2, Rational(1)}});
    } else if (name == "path-131") {
        f.graph = WeightedGraph::simple(3, {{1, 2}, {2, 3}},
                                        {{1, Rational(1)}, {2, Rational(3)}, {3, Rational(1)}});
    } else if (name == "star-2111") {
        f.graph = WeightedGraph::simple(4, {{1, 2}, {1, 3}, {1, 4}}, {{1, Rational(2)}});
    } else if (name == "triangle") {
        f.graph = WeightedGraph::simple(3, {{1, 2}, {1, 3}, {2, 3}});
    } else if (name == "c5") {
        f.graph = WeightedGraph::simple(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    } else if (name == "petersen") {
        f.graph = petersen();
    } else if (name == "triangle-pendant") {
        f.graph = WeightedGraph::simple(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    } else if (name == "k4-heavy") {
        f.graph = WeightedGraph::simple(
            4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {{1, Rational(4)}});
    } else if (name == "grid-3x3-layered") {
        f.graph = grid(3, 3, true);
    } else if (name == "grid-4x4-layered") {
        f.graph = grid(4, 4, true);
    } else if (name == "path-5-layered") {
        std::map<int, int> layers;
        for (int v = 1; v <= 5; ++v) layers[v] = v - 1;
        f.graph = WeightedGraph::build({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {},
                                       layers);
    } else if (name == "matching-tight") {
        // Edge weights (1, 11/10, 1) live in the matching system built by
        // the independence module; the underlying path is emitted here.
        f.graph = WeightedGraph::simple(4, {{1, 2}, {2, 3}, {3, 4}});
    } else if (name == "nmc-gap-3") {
        f.nmc = gap_instance(3, Rational(1, 2));
    } else if (name == "nmc-star") {
        // s1 - u1 - c - u2 - s2
        NMCInstance inst{WeightedGraph::simple(5, {{4, 1}, {1, 3}, {3, 2}, {2, 5}}), {4, 5}};
        inst.validate();
        f.nmc = inst;
    } else {
        throw Error("unknown fixture: " + name);
    }
    return f;
}

std::vector<std::string> fixture_names() {
    return {"edge-31",     "path-131",        "star-2111",       "triangle",
            "c5",          "petersen",        "triangle-pendant", "k4-heavy",
            "grid-3x3-layered", "grid-4x4-layered", "path-5-layered", "matching-tight",
            "nmc-gap-3",   "nmc-star"};
}

}  // namespace stabilis
