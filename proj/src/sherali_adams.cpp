#include "stabilis/sherali_adams.hpp"

#include <algorithm>

#include "stabilis/lp.hpp"

namespace stabilis {

const Rational& SASolution::y(const std::vector<int>& subset) const {
    std::vector<int> key = subset;
    std::sort(key.begin(), key.end());
    auto it = assignment.find(key);
    if (it == assignment.end()) throw Error("no SA variable for that subset");
    return it->second;
}

namespace {

// All subsets of `pool` with size <= cap, in deterministic order.
void subsets_up_to(const std::vector<int>& pool, int cap,
                   const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        visit(cur);
        if (static_cast<int>(cur.size()) == cap) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    for (int x : b)
        if (!std::binary_search(a.begin(), a.end(), x)) a.push_back(x);
    std::sort(a.begin(), a.end());
    return a;
}

struct RowSpec {
    std::vector<std::pair<int, Rational>> terms;  // variable index, coefficient
    Rational rhs;                                 // terms <= rhs
};

// Accumulates one linearized product row; the empty subset contributes to
// the constant side.
struct RowBuilder {
    std::map<std::vector<int>, int>* vars;
    std::map<int, Rational> coef;
    Rational constant;

    void add(const std::vector<int>& key, const Rational& c) {
        if (key.empty()) {
            constant += c;
            return;
        }
        coef[vars->at(key)] += c;
    }

    RowSpec finish() const {
        RowSpec r;
        for (const auto& [j, c] : coef)
            if (!c.is_zero()) r.terms.emplace_back(j, c);
        r.rhs = -constant;
        return r;
    }
};

}  // namespace

std::uint64_t sa_constraint_count(const WeightedGraph& g, int level) {
    const std::uint64_t n = g.size();
    const std::uint64_t rows_per_pair = g.edges().size() + 2 * n;
    // pairs = sum over k <= level of C(n,k) * 2^k  (choose S+T, then assign sides)
    std::uint64_t pairs = 0;
    std::uint64_t binom = 1;
    std::uint64_t pow2 = 1;
    for (int k = 0; k <= level; ++k) {
        if (k > 0) {
            if (n < static_cast<std::uint64_t>(k)) break;
            binom = binom * (n - k + 1) / k;
            pow2 *= 2;
        }
        std::uint64_t add = binom * pow2;
        if (pairs > UINT64_MAX / 2 - add) return UINT64_MAX / 2;
        pairs += add;
    }
    if (rows_per_pair != 0 && pairs > UINT64_MAX / 2 / rows_per_pair) return UINT64_MAX / 2;
    return pairs * rows_per_pair;
}

std::pair<SASolution, GraphLPSolution> sherali_adams_solve(const WeightedGraph& g, int level,
                                                           std::uint64_t budget) {
    if (level < 0) throw Error("negative SA level");
    std::uint64_t count = sa_constraint_count(g, level);
    if (count > budget)
        throw LimitError("SA level " + std::to_string(level) + " generates " +
                         std::to_string(count) + " constraints, budget " + std::to_string(budget));

    const std::vector<int>& verts = g.vertices();
    // Variable per nonempty subset of size <= level+1; Y_{} is the constant 1.
    std::map<std::vector<int>, int> vars;
    LinearProgram lp;
    subsets_up_to(verts, level + 1, [&](const std::vector<int>& s) {
        if (s.empty()) return;
        std::string name = "Y{";
        for (std::size_t i = 0; i < s.size(); ++i)
            name += (i ? "," : "") + std::to_string(s[i]);
        name += "}";
        vars[s] = lp.add_variable(std::move(name));
    });
    for (int v : verts) lp.set_objective(vars.at({v}), g.weight(v));

    // Generate every row of the two Fig.-SA families.
    std::vector<RowSpec> rows;
    subsets_up_to(verts, level, [&](const std::vector<int>& s) {
        std::vector<int> rest;
        for (int v : verts)
            if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
        int tcap = level - static_cast<int>(s.size());
        subsets_up_to(rest, tcap, [&](const std::vector<int>& t) {
            // Enumerate T' with signs.
            std::vector<std::pair<std::vector<int>, int>> tprimes;
            subsets_up_to(t, static_cast<int>(t.size()), [&](const std::vector<int>& tp) {
                tprimes.emplace_back(sorted_union(tp, s), tp.size() % 2 == 0 ? 1 : -1);
            });
            for (auto [u, v] : g.edges()) {
                RowBuilder rb{&vars, {}, Rational(0)};
                for (const auto& [base, sign] : tprimes) {
                    Rational sg(sign);
                    rb.add(sorted_union(base, {u}), sg);
                    rb.add(sorted_union(base, {v}), sg);
                    rb.add(base, -sg);
                }
                rows.push_back(rb.finish());
            }
            for (int u : verts) {
                RowBuilder low{&vars, {}, Rational(0)};   // -sum Y_{S u T' u {u}} <= 0
                RowBuilder high{&vars, {}, Rational(0)};  // sum (Y_{S u T' u {u}} - Y_{S u T'}) <= 0
                for (const auto& [base, sign] : tprimes) {
                    Rational sg(sign);
                    low.add(sorted_union(base, {u}), -sg);
                    high.add(sorted_union(base, {u}), sg);
                    high.add(base, -sg);
                }
                rows.push_back(low.finish());
                rows.push_back(high.finish());
            }
        });
    });

    // Lazy activation: start from the (empty,empty) rows, add violated rows
    // until the solution satisfies all of them. The solved LP is exactly the
    // full generated relaxation.
    const std::size_t initial = (g.edges().size() + 2 * g.size());
    std::vector<bool> active(rows.size(), false);
    for (std::size_t i = 0; i < rows.size() && i < initial; ++i) active[i] = true;
    LPSolution sol;
    for (;;) {
        LinearProgram cur = lp;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (active[i]) cur.add_constraint(rows[i].terms, LinearProgram::Rel::Le, rows[i].rhs);
        sol = simplex_solve(cur);
        if (!sol.optimal()) throw Error("SA relaxation must be feasible and bounded");
        bool added = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (active[i]) continue;
            Rational lhs;
            for (const auto& [j, c] : rows[i].terms) lhs += c * sol.values[j];
            if (lhs > rows[i].rhs) {
                active[i] = true;
                added = true;
            }
        }
        if (!added) break;
    }

    SASolution sa;
    sa.level = level;
    sa.value = sol.value;
    sa.assignment[{}] = Rational(1);
    for (const auto& [key, j] : vars) {
        const Rational& val = sol.values[j];
        if (val.sgn() < 0 || val > Rational(1)) throw Error("SA value escaped [0,1]");
        sa.assignment[key] = val;
    }
    GraphLPSolution proj;
    proj.value = sol.value;
    for (int v : verts) proj.x[v] = sa.assignment.at({v});
    return {std::move(sa), std::move(proj)};
}

}  // namespace stabilis
