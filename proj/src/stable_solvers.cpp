#include "stabilis/stable_solvers.hpp"

#include <algorithm>

#include "stabilis/greedy.hpp"
#include "stabilis/matching.hpp"
#include "stabilis/oracle.hpp"
#include "stabilis/standard_lp.hpp"

namespace stabilis {

VertexSet purify(const WeightedGraph& g, const VertexSet& i, long gamma,
                 std::size_t copy_edge_limit) {
    if (gamma < 1) throw Error("purify needs integer gamma >= 1");
    if (!g.integer_weights()) throw Error("purify needs integer weights");
    if (!is_independent(g, i)) throw Error("purify needs an independent set");

    // Copy counts per vertex.
    auto copies = [&](int v, bool left) -> long {
        const mpz_class& num = g.weight(v).num();
        if (!num.fits_slong_p()) throw LimitError("weight too large for purify copies");
        long c = num.get_si();
        return left ? gamma * c : c;
    };
    std::vector<int> left_ids, right_ids;
    std::vector<long> left_base, right_base;
    long nl = 0, nr = 0;
    for (int v : g.vertices()) {
        if (i.contains(v)) {
            left_ids.push_back(v);
            left_base.push_back(nl);
            nl += copies(v, true);
        } else {
            right_ids.push_back(v);
            right_base.push_back(nr);
            nr += copies(v, false);
        }
    }
    auto right_index = [&](int v) {
        auto it = std::lower_bound(right_ids.begin(), right_ids.end(), v);
        return static_cast<std::size_t>(it - right_ids.begin());
    };

    std::size_t edge_count = 0;
    std::vector<std::vector<int>> adj(nl);
    for (std::size_t li = 0; li < left_ids.size(); ++li) {
        int u = left_ids[li];
        for (int v : g.neighbors(u)) {
            std::size_t ri = right_index(v);
            long lu = copies(u, true), rv = copies(v, false);
            edge_count += static_cast<std::size_t>(lu) * static_cast<std::size_t>(rv);
            if (edge_count > copy_edge_limit) throw LimitError("purify copy graph too large");
            for (long a = 0; a < lu; ++a)
                for (long b = 0; b < rv; ++b)
                    adj[left_base[li] + a].push_back(static_cast<int>(right_base[ri] + b));
        }
    }
    MatchingResult m = hopcroft_karp(static_cast<int>(nl), static_cast<int>(nr), adj);
    VertexSet out;
    for (std::size_t li = 0; li < left_ids.size(); ++li) {
        long cnt = copies(left_ids[li], true);
        for (long a = 0; a < cnt; ++a) {
            if (m.match_left[left_base[li] + a] < 0) {
                out.insert(left_ids[li]);
                break;
            }
        }
    }
    return out;
}

ApproxOracle exact_approx_oracle(int limit) {
    ApproxOracle o;
    o.alpha = Rational(1);
    o.solve = [limit](const WeightedGraph& g) { return max_independent_set_exact(g, limit).first; };
    return o;
}

ApproxOracle greedy_approx_oracle(const WeightedGraph& g) {
    ApproxOracle o;
    o.alpha = Rational(std::max(1, g.max_degree()));
    o.solve = [](const WeightedGraph& h) { return greedy_solution(h); };
    return o;
}

long bounded_alg_gamma(const WeightedGraph& g, const Rational& alpha) {
    long delta = std::max(1, g.max_degree());
    mpz_class gm = ceil_sqrt(Rational(2 * delta) * alpha);
    if (!gm.fits_slong_p()) throw LimitError("gamma overflow");
    return std::max(1L, gm.get_si());
}

namespace {

std::optional<VertexSet> bounded_rec(const WeightedGraph& g, const VertexSet& active,
                                     const ApproxOracle& approx, long gamma) {
    if (active.empty()) return VertexSet{};
    WeightedGraph sub = g.induced(active);
    if (sub.total_weight() <= Rational(gamma)) {
        // Lemma "small-weight-is-empty": a stable instance this light has no
        // edges; a surviving edge refutes the stability premise.
        if (sub.edges().empty()) return active;
        return std::nullopt;
    }
    VertexSet i = approx.solve(sub);
    VertexSet s = purify(sub, i, gamma);
    if (s.empty()) return std::nullopt;
    VertexSet removed = s.set_union(sub.neighborhood_of(s));
    auto rest = bounded_rec(g, active.set_minus(removed), approx, gamma);
    if (!rest) return std::nullopt;
    return s.set_union(*rest);
}

}  // namespace

std::optional<VertexSet> bounded_alg(const WeightedGraph& g, const ApproxOracle& approx) {
    if (!g.integer_weights()) throw Error("bounded_alg needs integer weights");
    // gamma is fixed once from the input graph; recursion only shrinks the
    // degree, so it stays valid on induced subgraphs.
    long gamma = bounded_alg_gamma(g, approx.alpha);
    return bounded_rec(g, g.vertex_set(), approx, gamma);
}

Coloring welsh_powell(const WeightedGraph& g) {
    std::vector<int> order = g.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    Coloring c;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        int v = order[pos];
        c.bound = std::max(c.bound,
                           std::min(g.degree(v) + 1, static_cast<int>(pos) + 1));
        std::vector<bool> used(order.size() + 2, false);
        for (int u : g.neighbors(v)) {
            auto it = c.color.find(u);
            if (it != c.color.end()) used[it->second] = true;
        }
        int col = 1;
        while (used[col]) ++col;
        c.color[v] = col;
        c.colors_used = std::max(c.colors_used, col);
    }
    if (c.colors_used > c.bound) throw Error("Welsh-Powell bound violated (internal error)");
    return c;
}

VertexSet unbounded_alg(const WeightedGraph& g, int k) {
    if (k < 1) throw Error("unbounded_alg needs k >= 1");
    if (g.size() == 0) return {};
    if (k == 1) return greedy_solution(g);
    GraphLPSolution lp = solve_standard_lp(g, LPMethod::Simplex);
    if (lp.integral()) return lp.ones();
    const int n = static_cast<int>(g.size());
    const int cutoff = (n + k - 1) / k;  // ceil(n/k)
    VertexSet high;
    for (int v : g.vertices())
        if (g.degree(v) >= cutoff) high.insert(v);
    VertexSet best;
    Rational best_w(-1);
    auto offer = [&](const VertexSet& s) {
        Rational w = g.weight_of(s);
        if (w > best_w || (w == best_w && s < best)) {
            best = s;
            best_w = w;
        }
    };
    for (int u : high) {
        VertexSet rest = g.vertex_set().set_minus(g.closed_neighborhood(u));
        VertexSet s = unbounded_alg(g.induced(rest), k - 1);
        s.insert(u);
        offer(s);
    }
    offer(unbounded_alg(g.induced(g.vertex_set().set_minus(high)), k - 1));
    return best;
}

namespace {

struct Scored {
    Rational weight;
    VertexSet set;
};

Scored better(Scored a, Scored b) {
    if (a.weight > b.weight) return a;
    if (b.weight > a.weight) return b;
    return a.set < b.set ? a : b;
}

// DP over an ordered vertex sequence forming an induced path.
Scored path_dp(const WeightedGraph& g, const std::vector<int>& seq) {
    Scored excl{Rational(0), {}};
    Scored incl{Rational(0), {}};
    bool first = true;
    for (int v : seq) {
        if (first) {
            incl = {g.weight(v), VertexSet({v})};
            first = false;
            continue;
        }
        Scored take = excl;
        take.weight += g.weight(v);
        take.set.insert(v);
        Scored skip = better(excl, incl);
        incl = take;
        excl = skip;
    }
    if (first) return excl;
    return better(excl, incl);
}

Scored component_mis_deg2(const WeightedGraph& g, const VertexSet& comp) {
    if (comp.size() == 1) {
        int v = *comp.begin();
        return {g.weight(v), VertexSet({v})};
    }
    // Find an endpoint (degree <= 1 within the component); none => cycle.
    int start = -1;
    for (int v : comp) {
        int d = 0;
        for (int u : g.neighbors(v))
            if (comp.contains(u)) ++d;
        if (d <= 1) {
            start = v;
            break;
        }
    }
    auto walk = [&](int from) {
        std::vector<int> seq{from};
        VertexSet seen;
        seen.insert(from);
        int cur = from;
        for (;;) {
            int next = -1;
            for (int u : g.neighbors(cur))
                if (comp.contains(u) && !seen.contains(u)) {
                    next = u;
                    break;
                }
            if (next < 0) break;
            seq.push_back(next);
            seen.insert(next);
            cur = next;
        }
        return seq;
    };
    if (start >= 0) return path_dp(g, walk(start));
    // Cycle: smallest id as anchor; solve with the anchor excluded and with
    // the anchor forced in (both its neighbors excluded).
    int anchor = *comp.begin();
    std::vector<int> seq = walk(anchor);  // cycle order starting at anchor
    std::vector<int> without(seq.begin() + 1, seq.end());
    Scored a = path_dp(g, without);
    std::vector<int> inner(seq.begin() + 2, seq.end() - 1);
    Scored b = path_dp(g, inner);
    b.weight += g.weight(anchor);
    b.set.insert(anchor);
    return better(a, b);
}

}  // namespace

std::pair<VertexSet, Rational> mis_paths_cycles(const WeightedGraph& g) {
    if (g.max_degree() > 2) throw Error("mis_paths_cycles needs max degree <= 2");
    VertexSet out;
    Rational total;
    for (const auto& comp : g.connected_components()) {
        Scored s = component_mis_deg2(g, comp);
        out = out.set_union(s.set);
        total += s.weight;
    }
    return {out, total};
}

std::optional<VertexSet> robust_bounded_degree(const WeightedGraph& g) {
    const int delta = g.max_degree();
    if (delta <= 2) return mis_paths_cycles(g).first;
    VertexSet from_cliques;
    VertexSet rest_vertices;
    for (const auto& comp : g.connected_components()) {
        bool complete = static_cast<int>(comp.size()) == delta + 1;
        if (complete) {
            for (int a : comp)
                for (int b : comp)
                    if (a < b && !g.has_edge(a, b)) complete = false;
        }
        if (complete) {
            int best = -1;
            for (int v : comp)
                if (best < 0 || g.weight(v) > g.weight(best)) best = v;
            from_cliques.insert(best);
        } else {
            rest_vertices = rest_vertices.set_union(comp);
        }
    }
    if (rest_vertices.empty()) return from_cliques;
    GraphLPSolution lp = solve_standard_lp(g.induced(rest_vertices), LPMethod::Simplex);
    if (!lp.integral()) return std::nullopt;
    return from_cliques.set_union(lp.ones());
}

}  // namespace stabilis
