#include "stabilis/rounding.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "stabilis/lp.hpp"
#include "stabilis/oracle.hpp"

namespace stabilis {

RoundingScheme RoundingScheme::hochbaum(int k) {
    if (k < 2) throw Error("hochbaum scheme needs k >= 2");
    return {Kind::Hochbaum, k, Rational(k, 2), Rational(2 * (k - 1), k)};
}

RoundingScheme RoundingScheme::planar(int k) {
    if (k < 2) throw Error("planar scheme needs k >= 2");
    return {Kind::Planar, k, Rational(k, k - 1), Rational(k + 1, k)};
}

Rational RoundingScheme::bound_in(const Rational& x) const {
    if (kind == Kind::Planar) return Rational(k - 1, k) * x + x * x / Rational(k);
    return x / alpha;
}

Rational RoundingScheme::bound_out(const Rational& x) const {
    return beta * (Rational(1) - x);
}

VertexSet hochbaum_round(const WeightedGraph& g, const GraphLPSolution& sol,
                         const std::map<int, int>& coloring, Rng& rng, int k) {
    if (!sol.half_integral()) throw Error("hochbaum_round needs a half-integral solution");
    VertexSet halves = sol.halves();
    int colors = 0;
    for (int v : halves) {
        auto it = coloring.find(v);
        if (it == coloring.end()) throw Error("coloring misses a half vertex");
        if (it->second < 1) throw Error("colors must be >= 1");
        colors = std::max(colors, it->second);
    }
    for (int v : halves)
        for (int u : g.neighbors(v))
            if (halves.contains(u) && coloring.at(u) == coloring.at(v))
                throw Error("improper coloring of the half vertices");
    if (k <= 0) k = std::max(colors, 1);
    if (k < colors) throw Error("k smaller than the number of colors used");
    int j = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(k)));
    VertexSet s = sol.ones();
    for (int v : halves)
        if (coloring.at(v) == j) s.insert(v);
    if (!is_independent(g, s)) throw Error("hochbaum_round produced a dependent set");
    return s;
}

std::vector<VertexSet> baker_decompose(const WeightedGraph& g, int k, int j) {
    if (!g.has_layers()) throw Error("baker_decompose needs layers");
    if (k < 1 || j < 0 || j >= k) throw Error("baker_decompose needs 1 <= k and 0 <= j < k");
    const int top = g.max_layer();
    auto slab_of_layers = [&](int lo, int hi) {
        VertexSet s;
        for (int v : g.vertices())
            if (g.layer(v) >= lo && g.layer(v) <= hi) s.insert(v);
        return s;
    };
    std::vector<VertexSet> slabs;
    slabs.push_back(slab_of_layers(0, j));
    // Window i covers layers (i-1)k+j .. ik+j; consecutive windows overlap
    // exactly on the boundary layers (those congruent to j mod k). Windows
    // that would start at or above the top layer add nothing new.
    for (int i = 1; (i - 1) * k + j < top; ++i) {
        int lo = (i - 1) * k + j;
        int hi = std::min(i * k + j, top);
        VertexSet s = slab_of_layers(lo, hi);
        if (!s.empty()) slabs.push_back(s);
    }
    return slabs;
}

std::vector<Rational> Mixture::cdf() const {
    std::vector<Rational> c;
    Rational run;
    for (const auto& [set, p] : entries) {
        run += p;
        c.push_back(run);
    }
    if (c.empty() || c.back() != Rational(1)) throw Error("mixture probabilities must sum to 1");
    return c;
}

VertexSet Mixture::sample(Rng& rng) const {
    return entries[rng.sample_cdf(cdf())].first;
}

std::optional<Mixture> marginals_to_mixture(const WeightedGraph& h,
                                            const std::map<int, Rational>& y,
                                            int enumeration_limit) {
    if (static_cast<int>(h.size()) > enumeration_limit)
        throw LimitError("marginals_to_mixture: subgraph too large");
    for (int v : h.vertices()) {
        auto it = y.find(v);
        if (it == y.end()) throw Error("marginal missing for a vertex");
        if (it->second.sgn() < 0 || it->second > Rational(1))
            throw Error("marginal outside [0,1]");
    }
    std::vector<VertexSet> sets;
    enumerate_independent_sets(h, [&](const VertexSet& s) { sets.push_back(s); });
    LinearProgram lp;
    for (std::size_t i = 0; i < sets.size(); ++i)
        lp.add_variable("p" + std::to_string(i));
    std::vector<std::pair<int, Rational>> total;
    for (std::size_t i = 0; i < sets.size(); ++i) total.emplace_back(static_cast<int>(i), Rational(1));
    lp.add_constraint(total, LinearProgram::Rel::Eq, Rational(1));
    for (int v : h.vertices()) {
        std::vector<std::pair<int, Rational>> terms;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i].contains(v)) terms.emplace_back(static_cast<int>(i), Rational(1));
        lp.add_constraint(std::move(terms), LinearProgram::Rel::Eq, y.at(v));
    }
    LPSolution sol = simplex_solve(lp);
    if (sol.status != LPStatus::Optimal) return std::nullopt;
    Mixture m;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sol.values[i].sgn() > 0) m.entries.emplace_back(sets[i], sol.values[i]);
    // Recombining must reproduce every marginal as an exact identity.
    for (int v : h.vertices()) {
        Rational marg;
        for (const auto& [set, p] : m.entries)
            if (set.contains(v)) marg += p;
        if (marg != y.at(v)) throw Error("mixture marginal mismatch (internal error)");
    }
    return m;
}

PlanarScheme::PlanarScheme(const WeightedGraph& g, int k, std::map<int, Rational> y,
                           int enumeration_limit)
    : g_(&g), k_(k), y_(std::move(y)) {
    if (k < 1) throw Error("planar rounding needs k >= 1");
    slabs_.resize(k);
    mixtures_.resize(k);
    for (int j = 0; j < k; ++j) {
        slabs_[j] = baker_decompose(g, k, j);
        for (std::size_t i = 0; i < slabs_[j].size(); ++i) {
            WeightedGraph sub = g.induced(slabs_[j][i]);
            std::map<int, Rational> ysub;
            for (int v : sub.vertices()) ysub[v] = y_.at(v);
            auto m = marginals_to_mixture(sub, ysub, enumeration_limit);
            if (!m)
                throw NotInHullError(static_cast<int>(i),
                                     "slab " + std::to_string(i) + " (offset " +
                                         std::to_string(j) +
                                         "): marginals outside the independent-set polytope");
            mixtures_[j].push_back(std::move(*m));
        }
    }
}

VertexSet PlanarScheme::sample(Rng& rng) const {
    int j = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(k_)));
    const auto& slabs = slabs_[j];
    std::vector<VertexSet> samples;
    samples.reserve(slabs.size());
    for (std::size_t i = 0; i < slabs.size(); ++i) samples.push_back(mixtures_[j][i].sample(rng));
    VertexSet out;
    for (int v : g_->vertices()) {
        bool in_all = true, in_any = false;
        for (std::size_t i = 0; i < slabs.size(); ++i) {
            if (!slabs[i].contains(v)) continue;
            in_any = true;
            if (!samples[i].contains(v)) in_all = false;
        }
        if (in_any && in_all) out.insert(v);
    }
    if (!is_independent(*g_, out)) throw Error("planar rounding produced a dependent set");
    return out;
}

VertexSet planar_round(const WeightedGraph& g, int k, const std::map<int, Rational>& y,
                       std::uint64_t seed) {
    PlanarScheme scheme(g, k, y);
    Rng rng(seed);
    return scheme.sample(rng);
}

std::string RoundingReport::to_tsv() const {
    std::ostringstream os;
    os << "vertex\tx\temp_in\tbound_in\temp_out\tbound_out\tverdict\n";
    for (const auto& r : rows)
        os << r.vertex << '\t' << r.x << '\t' << r.emp_in << '\t' << r.bound_in << '\t'
           << r.emp_out << '\t' << r.bound_out << '\t' << (r.ok ? "ok" : "VIOLATION") << '\n';
    return os.str();
}

namespace {

// Deviation beyond 4 binomial standard deviations, compared exactly:
// (p - emp)^2 * N > 16 * p * (1 - p), only on the wrong side of the bound.
bool beyond_4_sigma(const Rational& emp, const Rational& bound, std::uint64_t trials,
                    bool bound_is_lower) {
    if (bound_is_lower ? emp >= bound : emp <= bound) return false;
    Rational diff = emp - bound;
    Rational clamped = bound;
    if (clamped.sgn() < 0) clamped = Rational(0);
    if (clamped > Rational(1)) clamped = Rational(1);
    Rational lhs = diff * diff * Rational(static_cast<long>(trials));
    Rational rhs = Rational(16) * clamped * (Rational(1) - clamped);
    return lhs > rhs;
}

}  // namespace

RoundingReport check_rounding_properties(const std::function<VertexSet(Rng&)>& sampler,
                                         const std::map<int, Rational>& x,
                                         const std::function<Rational(const Rational&)>& bound_in,
                                         const std::function<Rational(const Rational&)>& bound_out,
                                         std::uint64_t trials, std::uint64_t seed,
                                         bool minimization, int jobs) {
    std::map<int, std::uint64_t> in_count;
    for (const auto& [v, xv] : x) in_count[v] = 0;
    Rng base(seed);
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::map<int, std::uint64_t>& acc) {
        for (std::uint64_t t = lo; t < hi; ++t) {
            Rng rng = base.derive(t);
            VertexSet s = sampler(rng);
            for (int v : s) {
                auto it = acc.find(v);
                if (it != acc.end()) ++it->second;
            }
        }
    };
    if (jobs <= 1 || trials < 2) {
        run_range(0, trials, in_count);
    } else {
        const int workers = std::min<std::uint64_t>(jobs, trials);
        std::vector<std::map<int, std::uint64_t>> partial(workers, in_count);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = trials * w / workers;
            std::uint64_t hi = trials * (w + 1) / workers;
            pool.emplace_back([&, lo, hi, w] { run_range(lo, hi, partial[w]); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial)
            for (const auto& [v, c] : p) in_count[v] += c;
    }
    RoundingReport rep;
    rep.trials = trials;
    const Rational n(static_cast<long>(trials));
    for (const auto& [v, xv] : x) {
        RoundingReportRow row;
        row.vertex = v;
        row.x = xv;
        row.emp_in = Rational(static_cast<long>(in_count[v])) / n;
        row.emp_out = Rational(1) - row.emp_in;
        row.bound_in = bound_in(xv);
        row.bound_out = bound_out(xv);
        bool in_ok = !beyond_4_sigma(row.emp_in, row.bound_in, trials, !minimization);
        bool out_ok = !beyond_4_sigma(row.emp_out, row.bound_out, trials, minimization);
        row.ok = in_ok && out_ok;
        if (!row.ok) rep.all_ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

RoundingReport check_rounding_properties(const RoundingScheme& scheme,
                                         const std::function<VertexSet(Rng&)>& sampler,
                                         const std::map<int, Rational>& x, std::uint64_t trials,
                                         std::uint64_t seed, int jobs) {
    return check_rounding_properties(
        sampler, x, [&scheme](const Rational& v) { return scheme.bound_in(v); },
        [&scheme](const Rational& v) { return scheme.bound_out(v); }, trials, seed,
        /*minimization=*/false, jobs);
}

}  // namespace stabilis
