#include "stabilis/greedy.hpp"

namespace stabilis {

namespace {

int heaviest(const WeightedGraph& g, const VertexSet& active) {
    int best = -1;
    for (int v : active)
        if (best < 0 || g.weight(v) > g.weight(best)) best = v;
    return best;  // ids ascend, so ties keep the smallest id
}

}  // namespace

VertexSet greedy_solution(const WeightedGraph& g) {
    VertexSet active = g.vertex_set();
    VertexSet s;
    while (!active.empty()) {
        int u = heaviest(g, active);
        s.insert(u);
        active.erase(u);
        for (int v : g.neighbors(u)) active.erase(v);
    }
    return s;
}

Certificate greedy_certified(const WeightedGraph& g) {
    Certificate c;
    c.solution = greedy_solution(g);
    Rational gamma(std::max(1, g.max_degree()));
    c.perturbation.gamma = gamma;
    for (int v : c.solution) c.perturbation.multiplier[v] = gamma;
    return c;
}

Rational modified_greedy_gamma(int delta) {
    long d = delta;
    Rational target(d * d - d + 1);
    return Rational(ceil_sqrt(target * Rational(1000000)), mpz_class(1000));
}

Certificate modified_greedy(const WeightedGraph& g, int delta) {
    if (delta < 3) throw Error("modified_greedy needs delta >= 3 (use greedy_certified)");
    if (g.max_degree() > delta) throw Error("graph degree exceeds declared delta");
    const Rational gamma = modified_greedy_gamma(delta);
    VertexSet active = g.vertex_set();
    VertexSet s;
    while (!active.empty()) {
        int u = heaviest(g, active);
        VertexSet nb;
        for (int v : g.neighbors(u))
            if (active.contains(v)) nb.insert(v);
        bool nb_independent = true;
        for (int a : nb)
            for (int b : nb)
                if (a < b && g.has_edge(a, b)) nb_independent = false;
        bool commit_u = static_cast<int>(nb.size()) < delta || !nb_independent ||
                        gamma * g.weight(u) >= g.weight_of(nb);
        if (commit_u) {
            s.insert(u);
            active.erase(u);
            for (int v : nb) active.erase(v);
        } else {
            // Commit N(u); drop its whole second neighborhood (which
            // contains u) from the active set.
            VertexSet drop = nb;
            for (int v : nb)
                for (int w : g.neighbors(v))
                    if (active.contains(w)) drop.insert(w);
            for (int v : nb) s.insert(v);
            for (int v : drop) active.erase(v);
        }
    }
    Certificate c;
    c.solution = s;
    c.perturbation.gamma = gamma;
    for (int v : s) c.perturbation.multiplier[v] = gamma;
    return c;
}

}  // namespace stabilis
