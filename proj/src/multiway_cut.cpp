#include "stabilis/multiway_cut.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stabilis/lp.hpp"

namespace stabilis {

bool NMCInstance::is_terminal(int v) const {
    return std::find(terminals.begin(), terminals.end(), v) != terminals.end();
}

VertexSet NMCInstance::non_terminals() const {
    return graph.vertex_set().set_minus(terminal_set());
}

void NMCInstance::validate() const {
    if (k() < 2) throw Error("node multiway cut needs at least 2 terminals");
    std::set<int> uniq(terminals.begin(), terminals.end());
    if (uniq.size() != terminals.size()) throw Error("duplicate terminal");
    for (int t : terminals)
        if (!graph.has_vertex(t)) throw Error("terminal id out of range");
    for (int a : terminals)
        for (int b : terminals)
            if (a < b && graph.has_edge(a, b)) throw Error("terminals must be non-adjacent");
    if (!graph.is_connected()) throw Error("node multiway cut instance must be connected");
}

NMCInstance parse_nmc(std::istream& in) {
    auto [g, terms] = detail::parse_nmc_file(in);
    NMCInstance inst{std::move(g), std::move(terms)};
    inst.validate();
    return inst;
}

NMCInstance parse_nmc(const std::string& text) {
    std::istringstream is(text);
    return parse_nmc(is);
}

std::string render_nmc(const NMCInstance& inst) {
    std::string body = render_graph(inst.graph);
    body.replace(0, 5, "p nmc");
    std::ostringstream os;
    os << body;
    for (int t : inst.terminals) os << "t " << t << '\n';
    return os.str();
}

bool nmc_feasible(const NMCInstance& inst, const VertexSet& cut) {
    for (int v : cut)
        if (inst.is_terminal(v)) return false;
    VertexSet remaining = inst.graph.vertex_set().set_minus(cut);
    WeightedGraph sub = inst.graph.induced(remaining);
    for (const auto& comp : sub.connected_components()) {
        int terms = 0;
        for (int t : inst.terminals)
            if (comp.contains(t)) ++terms;
        if (terms > 1) return false;
    }
    return true;
}

NMCExact exact_nmc(const NMCInstance& inst, int limit) {
    inst.validate();
    VertexSet pool = inst.non_terminals();
    if (static_cast<int>(pool.size()) > limit)
        throw LimitError("exact_nmc: too many non-terminals");
    const auto& ids = pool.ids();
    const std::size_t total = std::size_t{1} << ids.size();
    std::vector<VertexSet> feasible;
    NMCExact best;
    bool have = false;
    for (std::size_t mask = 0; mask < total; ++mask) {
        VertexSet x;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (mask & (std::size_t{1} << i)) x.insert(ids[i]);
        if (!nmc_feasible(inst, x)) continue;
        feasible.push_back(x);
        Rational w = inst.graph.weight_of(x);
        if (!have || w < best.weight || (w == best.weight && x < best.cut)) {
            best.cut = x;
            best.weight = w;
            have = true;
        }
    }
    if (!have) throw Error("no feasible cut (internal error)");
    for (const auto& x : feasible) {
        VertexSet lost = best.cut.set_minus(x);
        if (lost.empty()) continue;
        Rational ratio = inst.graph.weight_of(x.set_minus(best.cut)) / inst.graph.weight_of(lost);
        if (!best.threshold || ratio < *best.threshold) {
            best.threshold = ratio;
            best.witness = x;
        }
    }
    return best;
}

bool NMCLPSolution::integral() const {
    for (const auto& [v, xv] : x)
        if (!xv.is_zero() && xv != Rational(1)) return false;
    return true;
}

bool NMCLPSolution::half_integral() const {
    for (const auto& [v, xv] : x)
        if (!xv.is_zero() && xv != Rational(1) && xv != Rational(1, 2)) return false;
    return true;
}

namespace {

// Vertex-cost shortest path (cost paid on entering each vertex, source
// included); deterministic smallest-id selection.
struct VertexDijkstra {
    std::map<int, Rational> dist;
    std::map<int, int> parent;

    VertexDijkstra(const WeightedGraph& g, const std::map<int, Rational>& cost, int source) {
        std::set<int> done;
        dist[source] = cost.at(source);
        for (;;) {
            int u = -1;
            for (const auto& [v, d] : dist)
                if (!done.count(v) && (u < 0 || d < dist.at(u))) u = v;
            if (u < 0) break;
            done.insert(u);
            for (int v : g.neighbors(u)) {
                Rational nd = dist.at(u) + cost.at(v);
                auto it = dist.find(v);
                if (it == dist.end() || nd < it->second) {
                    dist[v] = nd;
                    parent[v] = u;
                }
            }
        }
    }

    std::vector<int> path_to(int target) const {
        std::vector<int> p{target};
        int cur = target;
        while (parent.count(cur)) {
            cur = parent.at(cur);
            p.push_back(cur);
        }
        std::reverse(p.begin(), p.end());
        return p;
    }
};

bool all_pair_distances_at_least_one(const NMCInstance& inst, const std::map<int, Rational>& x) {
    for (std::size_t i = 0; i < inst.terminals.size(); ++i) {
        VertexDijkstra d(inst.graph, x, inst.terminals[i]);
        for (std::size_t j = i + 1; j < inst.terminals.size(); ++j) {
            auto it = d.dist.find(inst.terminals[j]);
            if (it != d.dist.end() && it->second < Rational(1)) return false;
        }
    }
    return true;
}

}  // namespace

NMCLPSolution nmc_lp_solve(const NMCInstance& inst) {
    inst.validate();
    VertexSet pool = inst.non_terminals();
    LinearProgram lp;
    lp.sense = LinearProgram::Sense::Minimize;
    std::map<int, int> var;
    for (int v : pool) {
        var[v] = lp.add_variable("x" + std::to_string(v));
        lp.set_objective(var[v], inst.graph.weight(v));
    }
    std::set<std::vector<int>> rows;  // dedup by the non-terminal support
    NMCLPSolution out;
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw Error("cutting-plane loop failed to converge");
        LinearProgram cur = lp;
        for (const auto& row : rows) {
            std::vector<std::pair<int, Rational>> terms;
            for (int v : row) terms.emplace_back(var.at(v), Rational(1));
            cur.add_constraint(std::move(terms), LinearProgram::Rel::Ge, Rational(1));
        }
        LPSolution sol = simplex_solve(cur);
        if (!sol.optimal()) throw Error("path LP must be feasible and bounded");
        std::map<int, Rational> x;
        for (int v : inst.graph.vertices()) x[v] = Rational(0);
        for (const auto& [v, j] : var) x[v] = sol.values[j];
        // Separation: per terminal pair, the minimum-x path; add it when the
        // distance is below 1.
        bool added = false;
        for (std::size_t i = 0; i < inst.terminals.size(); ++i) {
            VertexDijkstra d(inst.graph, x, inst.terminals[i]);
            for (std::size_t j = i + 1; j < inst.terminals.size(); ++j) {
                int t = inst.terminals[j];
                auto it = d.dist.find(t);
                if (it == d.dist.end() || it->second >= Rational(1)) continue;
                std::vector<int> support;
                for (int v : d.path_to(t))
                    if (!inst.is_terminal(v)) support.push_back(v);
                std::sort(support.begin(), support.end());
                if (rows.insert(support).second) added = true;
            }
        }
        if (!added) {
            out.value = sol.value;
            out.x = std::move(x);
            return out;
        }
    }
}

NMCHalfIntegral nmc_half_integral(const NMCInstance& inst, int limit) {
    NMCLPSolution lp = nmc_lp_solve(inst);
    VertexSet pool = inst.non_terminals();
    if (static_cast<int>(pool.size()) > limit)
        throw LimitError("nmc_half_integral: too many non-terminals");
    const auto& ids = pool.ids();
    const Rational half(1, 2);
    const Rational levels[3] = {Rational(0), half, Rational(1)};
    std::size_t total = 1;
    for (std::size_t i = 0; i < ids.size(); ++i) total *= 3;
    // Any feasible assignment is worth at least the LP optimum, so only
    // assignments that hit the LP value exactly need a feasibility check;
    // the first one in lexicographic digit order is the canonical optimum.
    std::vector<int> digits(ids.size(), 0);
    auto assignment_value = [&](const std::vector<int>& dg) {
        Rational value;
        for (std::size_t i = 0; i < ids.size(); ++i)
            value += inst.graph.weight(ids[i]) * levels[dg[i]];
        return value;
    };
    std::optional<std::map<int, Rational>> best;
    for (std::size_t code = 0; code < total; ++code) {
        if (assignment_value(digits) == lp.value) {
            std::map<int, Rational> x;
            for (int v : inst.graph.vertices()) x[v] = Rational(0);
            for (std::size_t i = 0; i < ids.size(); ++i) x[ids[i]] = levels[digits[i]];
            if (all_pair_distances_at_least_one(inst, x)) {
                best = std::move(x);
                break;
            }
        }
        // Increment the base-3 counter, least significant digit last so the
        // scan is lexicographic on (x(v_1), x(v_2), ...).
        for (std::size_t i = ids.size(); i-- > 0;) {
            if (++digits[i] < 3) break;
            digits[i] = 0;
        }
    }
    if (!best)
        throw Error("no feasible half-integral assignment matches the LP value "
                    "(would falsify half-integrality)");

    NMCHalfIntegral h;
    h.sol.value = lp.value;
    h.sol.x = *best;
    for (const auto& [v, xv] : h.sol.x) {
        if (xv.is_zero())
            h.v0.insert(v);
        else if (xv == half)
            h.vhalf.insert(v);
        else
            h.v1.insert(v);
    }
    // B_i: the x=0 region around s_i (reachable through zero vertices);
    // delta(B_i): half vertices adjacent to it.
    WeightedGraph zero_part = inst.graph.induced(h.v0);
    for (int s : inst.terminals) {
        VertexSet region;
        std::vector<int> stack{s};
        region.insert(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : zero_part.neighbors(u))
                if (!region.contains(v)) {
                    region.insert(v);
                    stack.push_back(v);
                }
        }
        VertexSet boundary;
        for (int u : h.vhalf)
            for (int v : inst.graph.neighbors(u))
                if (region.contains(v)) boundary.insert(u);
        h.zero_regions.push_back(std::move(region));
        h.boundaries.push_back(std::move(boundary));
    }
    for (int u : h.vhalf) {
        int owners = 0;
        for (const auto& b : h.boundaries)
            if (b.contains(u)) ++owners;
        if (owners != 1)
            throw Error("half vertex " + std::to_string(u) + " lies in " +
                        std::to_string(owners) + " boundaries (structure violation)");
    }
    return h;
}

VertexSet nmc_round(const NMCInstance& inst, const NMCHalfIntegral& h, Rng& rng) {
    const int k = inst.k();
    VertexSet x = h.v1;
    WeightedGraph rest = inst.graph.induced(h.v0.set_union(h.vhalf));
    for (const auto& comp : rest.connected_components()) {
        int spared = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(k)));
        for (int i = 1; i <= k; ++i) {
            if (i == spared) continue;
            for (int u : h.boundaries[i - 1])
                if (comp.contains(u)) x.insert(u);
        }
    }
    if (!nmc_feasible(inst, x)) throw Error("nmc rounding produced an infeasible cut");
    return x;
}

VertexSet nmc_round_seeded(const NMCInstance& inst, const NMCHalfIntegral& h, std::uint64_t seed) {
    Rng rng(seed);
    return nmc_round(inst, h, rng);
}

std::optional<VertexSet> robust_nmc(const NMCInstance& inst) {
    NMCLPSolution lp = nmc_lp_solve(inst);
    if (!lp.integral()) return std::nullopt;
    VertexSet x;
    for (const auto& [v, xv] : lp.x)
        if (xv == Rational(1)) x.insert(v);
    if (!nmc_feasible(inst, x)) throw Error("integral LP solution infeasible (internal error)");
    return x;
}

NMCInstance vc_to_nmc(const WeightedGraph& g) {
    if (g.size() < 2) throw Error("reduction needs at least 2 vertices");
    if (!g.is_connected()) throw Error("reduction needs a connected graph");
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
        if (g.vertices()[i] != i + 1) throw Error("reduction needs contiguous 1..n ids");
    std::vector<int> ids;
    std::map<int, Rational> weights;
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<int> terminals;
    for (int v : g.vertices()) {
        ids.push_back(v);
        weights[v] = g.weight(v);
    }
    for (int v : g.vertices()) {
        int s = n + v;
        ids.push_back(s);
        weights[s] = Rational(1);
        edges.emplace_back(s, v);
        terminals.push_back(s);
    }
    NMCInstance inst{WeightedGraph::build(std::move(ids), std::move(edges), std::move(weights)),
                     std::move(terminals)};
    inst.validate();
    return inst;
}

NMCInstance gap_instance(int k, const Rational& epsilon) {
    if (k < 3) throw Error("gap instance needs k >= 3");
    if (epsilon.sgn() <= 0 || epsilon >= Rational(1)) throw Error("gap instance needs 0 < epsilon < 1");
    std::vector<int> ids;
    std::map<int, Rational> weights;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> terminals;
    const int hub = k + 1;
    for (int i = 1; i <= k; ++i) {
        ids.push_back(i);  // spoke u_i
        weights[i] = (i < k) ? Rational(1) : Rational(k - 1) - epsilon / Rational(2);
        edges.emplace_back(i, hub);
    }
    ids.push_back(hub);
    weights[hub] = Rational(static_cast<long>(k) * k * k);
    for (int i = 1; i <= k; ++i) {
        int s = hub + i;
        ids.push_back(s);
        weights[s] = Rational(1);
        edges.emplace_back(s, i);
        terminals.push_back(s);
    }
    NMCInstance inst{WeightedGraph::build(std::move(ids), std::move(edges), std::move(weights)),
                     std::move(terminals)};
    inst.validate();
    return inst;
}

NMCInstance boost_nmc_to_stable(const NMCInstance& inst, const Rational& target_gamma,
                                int limit) {
    NMCExact base = exact_nmc(inst, limit);
    NMCInstance cur = inst;
    for (int rounds = 0; rounds < 128; ++rounds) {
        NMCExact e = exact_nmc(cur, limit);
        if (e.is_stable(target_gamma)) return cur;
        std::map<int, Rational> w;
        for (int v : cur.non_terminals())
            if (!base.cut.contains(v)) w[v] = cur.graph.weight(v) * Rational(2);
        cur.graph = cur.graph.with_weights(std::move(w));
    }
    throw Error("boost_nmc_to_stable failed to converge");
}

}  // namespace stabilis
