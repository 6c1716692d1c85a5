#include "stabilis/oracle.hpp"

#include <algorithm>

namespace stabilis {

namespace {

void check_limit(const WeightedGraph& g, int limit, const char* what) {
    if (static_cast<int>(g.size()) > limit)
        throw LimitError(std::string(what) + ": graph has " + std::to_string(g.size()) +
                         " vertices, limit " + std::to_string(limit));
}

// Pivot choice shared by the enumerator and the B&B: highest degree in the
// remaining subgraph, smallest id on ties.
int pick_pivot(const WeightedGraph& g, const VertexSet& remaining) {
    int best = -1, best_deg = -1;
    for (int v : remaining) {
        int d = 0;
        for (int u : g.neighbors(v))
            if (remaining.contains(u)) ++d;
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

void enumerate_rec(const WeightedGraph& g, VertexSet& remaining, VertexSet& chosen,
                   const std::function<void(const VertexSet&)>& visit) {
    if (remaining.empty()) {
        visit(chosen);
        return;
    }
    int v = pick_pivot(g, remaining);
    // include v
    VertexSet removed;
    removed.insert(v);
    for (int u : g.neighbors(v))
        if (remaining.contains(u)) removed.insert(u);
    VertexSet rest = remaining.set_minus(removed);
    chosen.insert(v);
    enumerate_rec(g, rest, chosen, visit);
    chosen.erase(v);
    // exclude v
    VertexSet rest2 = remaining;
    rest2.erase(v);
    enumerate_rec(g, rest2, chosen, visit);
}

struct Best {
    VertexSet set;
    Rational weight;
    bool valid = false;

    void offer(const VertexSet& s, const Rational& w) {
        if (!valid || w > weight || (w == weight && s < set)) {
            set = s;
            weight = w;
            valid = true;
        }
    }
};

void bb_rec(const WeightedGraph& g, VertexSet& remaining, VertexSet& chosen,
            const Rational& chosen_weight, Best& best) {
    if (remaining.empty()) {
        best.offer(chosen, chosen_weight);
        return;
    }
    // Weight-sum upper bound. Prune only on strict shortfall so equal-weight
    // lexicographic ties are still explored.
    Rational ub = chosen_weight + g.weight_of(remaining);
    if (best.valid && ub < best.weight) return;
    int v = pick_pivot(g, remaining);
    VertexSet removed;
    removed.insert(v);
    for (int u : g.neighbors(v))
        if (remaining.contains(u)) removed.insert(u);
    VertexSet rest = remaining.set_minus(removed);
    chosen.insert(v);
    bb_rec(g, rest, chosen, chosen_weight + g.weight(v), best);
    chosen.erase(v);
    VertexSet rest2 = remaining;
    rest2.erase(v);
    bb_rec(g, rest2, chosen, chosen_weight, best);
}

}  // namespace

void enumerate_independent_sets(const WeightedGraph& g,
                                const std::function<void(const VertexSet&)>& visit) {
    VertexSet remaining = g.vertex_set();
    VertexSet chosen;
    enumerate_rec(g, remaining, chosen, visit);
}

std::pair<VertexSet, Rational> max_independent_set_exact(const WeightedGraph& g, int limit) {
    check_limit(g, limit, "max_independent_set_exact");
    Best best;
    VertexSet remaining = g.vertex_set();
    VertexSet chosen;
    bb_rec(g, remaining, chosen, Rational(0), best);
    return {best.set, best.weight};
}

StabilityReport stability_threshold(const WeightedGraph& g, int limit) {
    check_limit(g, limit, "stability_threshold");
    StabilityReport rep;
    auto [opt, optw] = max_independent_set_exact(g, limit);
    rep.optimum = opt;
    rep.optimum_weight = optw;
    enumerate_independent_sets(g, [&](const VertexSet& s) {
        VertexSet extra = s.set_minus(rep.optimum);
        if (extra.empty()) return;
        Rational ratio = g.weight_of(rep.optimum.set_minus(s)) / g.weight_of(extra);
        if (!rep.threshold || ratio < *rep.threshold) {
            rep.threshold = ratio;
            rep.witness = s;
        }
    });
    return rep;
}

bool verify_certificate(const WeightedGraph& g, const Certificate& c, VerifyRoute route,
                        int limit) {
    c.perturbation.validate(g);
    if (!is_independent(g, c.solution)) return false;
    WeightedGraph gp = apply_perturbation(g, c.perturbation);
    Rational sw = gp.weight_of(c.solution);
    if (route == VerifyRoute::PerturbedOracle) {
        auto [opt, optw] = max_independent_set_exact(gp, limit);
        (void)opt;
        return sw >= optw;
    }
    check_limit(g, limit, "verify_certificate");
    bool ok = true;
    enumerate_independent_sets(gp, [&](const VertexSet& s) {
        if (ok && gp.weight_of(s) > sw) ok = false;
    });
    return ok;
}

bool certified_inequality(const WeightedGraph& g, const VertexSet& s, const Rational& gamma,
                          int limit) {
    check_limit(g, limit, "certified_inequality");
    bool ok = true;
    enumerate_independent_sets(g, [&](const VertexSet& i) {
        if (!ok) return;
        if (gamma * g.weight_of(s.set_minus(i)) < g.weight_of(i.set_minus(s))) ok = false;
    });
    return ok;
}

bool is_gamma_stable(const WeightedGraph& g, const Rational& gamma, int limit) {
    return stability_threshold(g, limit).is_stable(gamma);
}

}  // namespace stabilis
