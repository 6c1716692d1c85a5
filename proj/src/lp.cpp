#include "stabilis/lp.hpp"

#include <sstream>
#include <stdexcept>

#include "stabilis/graph.hpp"

namespace stabilis {

int LinearProgram::add_variable(std::string name, std::optional<Rational> lo,
                                std::optional<Rational> hi) {
    if (lo && hi && *hi < *lo) throw Error("variable bounds cross: " + name);
    names_.push_back(std::move(name));
    lo_.push_back(std::move(lo));
    hi_.push_back(std::move(hi));
    objective_.emplace_back(0);
    return static_cast<int>(names_.size()) - 1;
}

void LinearProgram::set_objective(int var, const Rational& coef) {
    objective_.at(var) = coef;
}

void LinearProgram::add_constraint(std::vector<std::pair<int, Rational>> terms, Rel rel,
                                   Rational rhs) {
    for (auto& [v, c] : terms)
        if (v < 0 || v >= static_cast<int>(names_.size()))
            throw Error("constraint references undeclared variable");
    constraints_.push_back({std::move(terms), rel, std::move(rhs)});
}

std::string LinearProgram::dump() const {
    std::ostringstream os;
    os << (sense == Sense::Maximize ? "max:" : "min:");
    for (std::size_t j = 0; j < names_.size(); ++j)
        if (!objective_[j].is_zero()) os << ' ' << objective_[j] << '*' << names_[j];
    os << '\n';
    for (const auto& c : constraints_) {
        bool first = true;
        for (const auto& [v, coef] : c.terms) {
            if (!first) os << " + ";
            os << coef << '*' << names_[v];
            first = false;
        }
        os << (c.rel == Rel::Le ? " <= " : c.rel == Rel::Ge ? " >= " : " = ") << c.rhs << '\n';
    }
    for (std::size_t j = 0; j < names_.size(); ++j) {
        os << (lo_[j] ? lo_[j]->str() : std::string("-inf")) << " <= " << names_[j] << " <= "
           << (hi_[j] ? hi_[j]->str() : std::string("inf")) << '\n';
    }
    return os.str();
}

namespace {

// Dense two-phase tableau. Column layout: structural vars, slacks,
// artificials, rhs last.
struct Tableau {
    std::vector<std::vector<Rational>> rows;  // m x (cols+1)
    std::vector<Rational> cost;               // phase-2 reduced costs, cols+1
    std::vector<Rational> cost1;              // phase-1, cols+1
    std::vector<int> basis;                   // var index per row
    int cols = 0;
    int first_artificial = 0;  // columns >= this are artificial

    void pivot(int r, int c) {
        auto& prow = rows[r];
        Rational inv = Rational(1) / prow[c];
        for (auto& x : prow) x *= inv;
        auto eliminate = [&](std::vector<Rational>& row) {
            const Rational f = row[c];
            if (f.is_zero()) return;
            for (int j = 0; j <= cols; ++j)
                if (!prow[j].is_zero()) row[j] -= f * prow[j];
            row[c] = Rational(0);
        };
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != r) eliminate(rows[i]);
        eliminate(cost);
        eliminate(cost1);
        basis[r] = c;
    }

    // Maximization step with Bland's rule on the given cost row.
    // Returns: 0 optimal, 1 pivoted, -1 unbounded.
    int step(std::vector<Rational>& crow, bool allow_artificial) {
        int enter = -1;
        int limit = allow_artificial ? cols : first_artificial;
        for (int j = 0; j < limit; ++j) {
            if (crow[j].sgn() > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return 0;
        int leave = -1;
        Rational best;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][enter].sgn() <= 0) continue;
            Rational ratio = rows[i][cols] / rows[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = static_cast<int>(i);
            }
        }
        if (leave < 0) return -1;
        pivot(leave, enter);
        return 1;
    }
};

}  // namespace

LPSolution simplex_solve(const LinearProgram& lp) {
    const int nv = static_cast<int>(lp.num_variables());
    // Variable transform to y >= 0: shift by finite lower bound, mirror when
    // only an upper bound exists, split free variables.
    struct Map {
        int ycol = -1;       // primary column
        int yneg = -1;       // second column for free variables
        Rational shift;      // x = shift + y (or shift - y when mirrored)
        bool mirrored = false;
    };
    std::vector<Map> vmap(nv);
    int ycount = 0;
    for (int j = 0; j < nv; ++j) {
        const auto& lo = lp.lower(j);
        const auto& hi = lp.upper(j);
        if (lo) {
            vmap[j] = {ycount++, -1, *lo, false};
        } else if (hi) {
            vmap[j] = {ycount++, -1, *hi, true};
        } else {
            vmap[j] = {ycount, ycount + 1, Rational(0), false};
            ycount += 2;
        }
    }

    // Rows in y-space, all converted to Le or Eq.
    struct Row {
        std::vector<Rational> a;  // length ycount
        bool eq;
        Rational b;
    };
    std::vector<Row> rows;
    auto add_row = [&](const std::vector<std::pair<int, Rational>>& terms, LinearProgram::Rel rel,
                       Rational rhs) {
        Row r;
        r.a.assign(ycount, Rational(0));
        r.b = std::move(rhs);
        for (const auto& [v, c] : terms) {
            const Map& m = vmap[v];
            if (m.yneg >= 0) {
                r.a[m.ycol] += c;
                r.a[m.yneg] -= c;
            } else if (m.mirrored) {
                r.a[m.ycol] -= c;
                r.b -= c * m.shift;
            } else {
                r.a[m.ycol] += c;
                r.b -= c * m.shift;
            }
        }
        if (rel == LinearProgram::Rel::Ge) {
            for (auto& x : r.a) x = -x;
            r.b = -r.b;
            rel = LinearProgram::Rel::Le;
        }
        r.eq = (rel == LinearProgram::Rel::Eq);
        rows.push_back(std::move(r));
    };
    for (const auto& c : lp.constraints()) add_row(c.terms, c.rel, c.rhs);
    // Finite upper bounds (for variables with a lower bound too) become rows.
    for (int j = 0; j < nv; ++j)
        if (lp.lower(j) && lp.upper(j))
            add_row({{j, Rational(1)}}, LinearProgram::Rel::Le, *lp.upper(j));

    // Objective in y-space (always maximize internally).
    std::vector<Rational> obj(ycount, Rational(0));
    Rational obj_const;
    const bool maximize = lp.sense == LinearProgram::Sense::Maximize;
    for (int j = 0; j < nv; ++j) {
        Rational c = lp.objective(j);
        if (!maximize) c = -c;
        if (c.is_zero()) continue;
        const Map& m = vmap[j];
        if (m.yneg >= 0) {
            obj[m.ycol] += c;
            obj[m.yneg] -= c;
        } else if (m.mirrored) {
            obj[m.ycol] -= c;
            obj_const += c * m.shift;
        } else {
            obj[m.ycol] += c;
            obj_const += c * m.shift;
        }
    }

    const int m = static_cast<int>(rows.size());
    int nslack = 0;
    for (const auto& r : rows)
        if (!r.eq) ++nslack;
    // Count artificials: eq rows always; le rows with negative rhs.
    int nart = 0;
    for (const auto& r : rows)
        if (r.eq || r.b.sgn() < 0) ++nart;

    Tableau t;
    t.cols = ycount + nslack + nart;
    t.first_artificial = ycount + nslack;
    t.rows.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
    t.basis.assign(m, -1);
    t.cost.assign(t.cols + 1, Rational(0));
    t.cost1.assign(t.cols + 1, Rational(0));

    int slack_at = ycount;
    int art_at = t.first_artificial;
    bool any_art = false;
    for (int i = 0; i < m; ++i) {
        Row& r = rows[i];
        bool neg = r.b.sgn() < 0;
        auto& out = t.rows[i];
        for (int j = 0; j < ycount; ++j) out[j] = neg ? -r.a[j] : r.a[j];
        out[t.cols] = neg ? -r.b : r.b;
        if (!r.eq) {
            out[slack_at] = neg ? Rational(-1) : Rational(1);
            if (!neg) t.basis[i] = slack_at;
            ++slack_at;
        }
        if (t.basis[i] < 0) {
            out[art_at] = Rational(1);
            t.basis[i] = art_at;
            ++art_at;
            any_art = true;
        }
    }

    for (int j = 0; j < ycount; ++j) t.cost[j] = obj[j];
    if (any_art) {
        // Phase-1 objective: maximize -sum(artificials); price out the
        // basic artificials so reduced costs start consistent.
        for (int j = t.first_artificial; j < t.cols; ++j) t.cost1[j] = Rational(-1);
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] >= t.first_artificial) {
                for (int j = 0; j <= t.cols; ++j) t.cost1[j] += t.rows[i][j];
                t.cost1[t.basis[i]] = Rational(0);
            }
        }
        for (;;) {
            int s = t.step(t.cost1, true);
            if (s == 0) break;
            if (s == -1) throw Error("phase-1 unbounded (internal error)");
        }
        if (!t.cost1[t.cols].is_zero()) return {LPStatus::Infeasible, Rational(0), {}};
        // Drive remaining basic artificials out or drop redundant rows.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < t.first_artificial) continue;
            int piv = -1;
            for (int j = 0; j < t.first_artificial; ++j)
                if (!t.rows[i][j].is_zero()) {
                    piv = j;
                    break;
                }
            if (piv >= 0) {
                t.pivot(i, piv);
            } else {
                // Redundant row: zero it so it can never constrain a pivot.
                for (int j = 0; j <= t.cols; ++j) t.rows[i][j] = Rational(0);
            }
        }
    }

    for (;;) {
        int s = t.step(t.cost, false);
        if (s == 0) break;
        if (s == -1) return {LPStatus::Unbounded, Rational(0), {}};
    }

    // Recover y, then x.
    std::vector<Rational> y(ycount, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= 0 && t.basis[i] < ycount) y[t.basis[i]] = t.rows[i][t.cols];
    LPSolution sol;
    sol.status = LPStatus::Optimal;
    sol.values.resize(nv);
    for (int j = 0; j < nv; ++j) {
        const Map& mp = vmap[j];
        if (mp.yneg >= 0)
            sol.values[j] = y[mp.ycol] - y[mp.yneg];
        else if (mp.mirrored)
            sol.values[j] = mp.shift - y[mp.ycol];
        else
            sol.values[j] = mp.shift + y[mp.ycol];
    }
    Rational value;
    for (int j = 0; j < nv; ++j) value += lp.objective(j) * sol.values[j];
    sol.value = value;
    // The solution must satisfy every constraint exactly; rational pivots
    // make this an identity, so a miss is a solver bug.
    for (const auto& c : lp.constraints()) {
        Rational lhs;
        for (const auto& [v, coef] : c.terms) lhs += coef * sol.values[v];
        bool ok = c.rel == LinearProgram::Rel::Le   ? lhs <= c.rhs
                  : c.rel == LinearProgram::Rel::Ge ? lhs >= c.rhs
                                                    : lhs == c.rhs;
        if (!ok) throw Error("simplex solution violates a constraint (internal error)");
    }
    for (int j = 0; j < nv; ++j) {
        if (lp.lower(j) && sol.values[j] < *lp.lower(j))
            throw Error("simplex solution violates a bound (internal error)");
        if (lp.upper(j) && sol.values[j] > *lp.upper(j))
            throw Error("simplex solution violates a bound (internal error)");
    }
    return sol;
}

}  // namespace stabilis
