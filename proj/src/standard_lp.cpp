#include "stabilis/standard_lp.hpp"


#include "stabilis/flow.hpp"
#include "stabilis/sherali_adams.hpp"

namespace stabilis {

namespace {
const Rational kHalf(1, 2);
}

bool GraphLPSolution::integral() const {
    for (const auto& [v, xv] : x)
        if (!xv.is_zero() && xv != Rational(1)) return false;
    return true;
}

bool GraphLPSolution::half_integral() const {
    for (const auto& [v, xv] : x)
        if (!xv.is_zero() && xv != Rational(1) && xv != kHalf) return false;
    return true;
}

VertexSet GraphLPSolution::ones() const {
    VertexSet s;
    for (const auto& [v, xv] : x)
        if (xv == Rational(1)) s.insert(v);
    return s;
}

VertexSet GraphLPSolution::halves() const {
    VertexSet s;
    for (const auto& [v, xv] : x)
        if (xv == kHalf) s.insert(v);
    return s;
}

VertexSet GraphLPSolution::zeros() const {
    VertexSet s;
    for (const auto& [v, xv] : x)
        if (xv.is_zero()) s.insert(v);
    return s;
}

LinearProgram build_standard_lp(const WeightedGraph& g) {
    LinearProgram lp;
    std::map<int, int> var;
    for (int v : g.vertices()) {
        int j = lp.add_variable("x" + std::to_string(v), Rational(0), Rational(1));
        lp.set_objective(j, g.weight(v));
        var[v] = j;
    }
    for (auto [u, v] : g.edges())
        lp.add_constraint({{var[u], Rational(1)}, {var[v], Rational(1)}}, LinearProgram::Rel::Le,
                          Rational(1));
    return lp;
}

namespace {

GraphLPSolution solve_by_simplex(const WeightedGraph& g) {
    LinearProgram lp = build_standard_lp(g);
    LPSolution sol = simplex_solve(lp);
    if (!sol.optimal()) throw Error("standard LP must be feasible and bounded");
    GraphLPSolution out;
    out.value = sol.value;
    int j = 0;
    for (int v : g.vertices()) out.x[v] = sol.values[j++];
    return out;
}

// Nemhauser-Trotter: a minimum-weight vertex cover of the bipartite
// doubling (computed as a cut in a flow network) gives a half-integral
// optimum of the vertex-cover LP; complement to get the MIS LP optimum.
GraphLPSolution solve_by_nt(const WeightedGraph& g) {
    const int n = static_cast<int>(g.size());
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[g.vertices()[i]] = i;
    // Nodes: source, left copies, right copies, sink.
    const int source = 0, sink = 2 * n + 1;
    auto left = [&](int i) { return 1 + i; };
    auto right = [&](int i) { return 1 + n + i; };
    FlowNetwork net(2 * n + 2);
    for (int i = 0; i < n; ++i) {
        const Rational& w = g.weight(g.vertices()[i]);
        net.add_arc(source, left(i), w);
        net.add_arc(right(i), sink, w);
    }
    for (auto [u, v] : g.edges()) {
        net.add_arc_unbounded(left(idx[u]), right(idx[v]));
        net.add_arc_unbounded(left(idx[v]), right(idx[u]));
    }
    Rational flow = net.max_flow(source, sink);
    std::vector<bool> src = net.source_side();
    GraphLPSolution out;
    for (int i = 0; i < n; ++i) {
        // Cover membership from the canonical minimum cut: left copy is in
        // the cover iff unreachable, right copy iff reachable.
        int cover = (src[left(i)] ? 0 : 1) + (src[right(i)] ? 1 : 0);
        // Vertex-cover value cover/2; MIS value is the complement.
        out.x[g.vertices()[i]] = Rational(1) - Rational(cover, 2);
    }
    out.value = g.total_weight() - flow / Rational(2);
    Rational check;
    for (const auto& [v, xv] : out.x) check += g.weight(v) * xv;
    if (check != out.value) throw Error("NT objective mismatch (internal error)");
    for (auto [u, v] : g.edges())
        if (out.x.at(u) + out.x.at(v) > Rational(1))
            throw Error("NT solution infeasible (internal error)");
    // Canonical tightening: in a bipartite component of the half part both
    // sides weigh exactly half the component (all-1/2 is optimal there), so
    // raising the side holding the smallest id to 1 keeps the value and
    // feasibility while making bipartite instances come out integral.
    VertexSet halves;
    for (const auto& [v, xv] : out.x)
        if (xv == Rational(1, 2)) halves.insert(v);
    WeightedGraph half_part = g.induced(halves);
    for (const auto& comp : half_part.connected_components()) {
        VertexSet side_a, side_b;
        std::map<int, int> color;
        bool bipartite = true;
        std::vector<int> stack{*comp.begin()};
        color[*comp.begin()] = 0;
        while (!stack.empty() && bipartite) {
            int v = stack.back();
            stack.pop_back();
            for (int u : half_part.neighbors(v)) {
                if (!comp.contains(u)) continue;
                auto it = color.find(u);
                if (it == color.end()) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (it->second == color[v]) {
                    bipartite = false;
                }
            }
        }
        if (!bipartite) continue;
        for (int v : comp) (color[v] == color[*comp.begin()] ? side_a : side_b).insert(v);
        if (g.weight_of(side_a) != g.weight_of(side_b))
            throw Error("half component sides must balance (internal error)");
        for (int v : side_a) out.x[v] = Rational(1);
        for (int v : side_b) out.x[v] = Rational(0);
    }
    Rational tightened;
    for (const auto& [v, xv] : out.x) tightened += g.weight(v) * xv;
    if (tightened != out.value) throw Error("NT tightening changed the value (internal error)");
    for (auto [u, v] : g.edges())
        if (out.x.at(u) + out.x.at(v) > Rational(1))
            throw Error("NT tightening broke feasibility (internal error)");
    return out;
}

}  // namespace

GraphLPSolution solve_standard_lp(const WeightedGraph& g, LPMethod method) {
    return method == LPMethod::Simplex ? solve_by_simplex(g) : solve_by_nt(g);
}

std::optional<VertexSet> robust_solve(const WeightedGraph& g, Relaxation rel) {
    GraphLPSolution sol;
    if (rel.kind == Relaxation::Kind::StandardLP) {
        sol = solve_standard_lp(g, LPMethod::Simplex);
    } else {
        auto [sa, proj] = sherali_adams_solve(g, rel.level);
        (void)sa;
        sol = proj;
    }
    if (!sol.integral()) return std::nullopt;
    VertexSet s = sol.ones();
    if (!is_independent(g, s)) throw Error("integral relaxation optimum not independent");
    return s;
}

}  // namespace stabilis
