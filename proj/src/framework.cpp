#include "stabilis/framework.hpp"

#include <sstream>

#include "stabilis/greedy.hpp"
#include "stabilis/rounding.hpp"
#include "stabilis/sherali_adams.hpp"
#include "stabilis/stable_solvers.hpp"
#include "stabilis/standard_lp.hpp"

namespace stabilis {

namespace {

// Rational upper bound on ln 2 (0.693147180...).
const Rational kLn2Upper(693148, 1000000);

class HochbaumPlug final : public RelaxationPlug {
public:
    explicit HochbaumPlug(const WeightedGraph& g) : g_(&g) {
        k_ = std::max(2, welsh_powell(g).colors_used);
    }

    Rational solve(const WeightedGraph& perturbed) override {
        sol_ = solve_standard_lp(perturbed, LPMethod::NemhauserTrotter);
        coloring_ = welsh_powell(perturbed.induced(sol_.halves())).color;
        int used = 0;
        for (const auto& [v, c] : coloring_) used = std::max(used, c);
        k_round_ = std::max(k_, used);
        return sol_.value;
    }

    VertexSet round(Rng& rng) override { return hochbaum_round(*g_, sol_, coloring_, rng, k_round_); }

    Rational alpha() const override { return Rational(k_, 2); }
    Rational beta() const override { return Rational(2 * (k_ - 1), k_); }
    std::string name() const override { return "hochbaum"; }

private:
    const WeightedGraph* g_;
    int k_;
    int k_round_ = 2;
    GraphLPSolution sol_;
    std::map<int, int> coloring_;
};

class PlanarPlug final : public RelaxationPlug {
public:
    PlanarPlug(const WeightedGraph& g, int k, int sa_level) : g_(&g), k_(k), level_(sa_level) {
        if (k < 2) throw Error("planar plug needs k >= 2");
        if (!g.has_layers()) throw Error("planar plug needs a layered graph");
    }

    Rational solve(const WeightedGraph& perturbed) override {
        auto [sa, proj] = sherali_adams_solve(perturbed, level_);
        (void)sa;
        scheme_ = std::make_unique<PlanarScheme>(*g_, k_, proj.x);
        return proj.value;
    }

    VertexSet round(Rng& rng) override {
        if (!scheme_) throw Error("round before solve");
        return scheme_->sample(rng);
    }

    Rational alpha() const override { return Rational(k_, k_ - 1); }
    Rational beta() const override { return Rational(k_ + 1, k_); }
    std::string name() const override { return "planar"; }

private:
    const WeightedGraph* g_;
    int k_;
    int level_;
    std::unique_ptr<PlanarScheme> scheme_;
};

mpz_class ceil_log2(const mpz_class& v) {
    if (v <= 1) return 0;
    mpz_class x = v - 1;
    return mpz_class(mpz_sizeinbase(x.get_mpz_t(), 2));
}

}  // namespace

std::unique_ptr<RelaxationPlug> make_hochbaum_plug(const WeightedGraph& g) {
    return std::make_unique<HochbaumPlug>(g);
}

std::unique_ptr<RelaxationPlug> make_planar_plug(const WeightedGraph& g, int k, int sa_level) {
    return std::make_unique<PlanarPlug>(g, k, sa_level);
}

FrameworkConfig FrameworkConfig::make(const WeightedGraph& g, const Rational& alpha,
                                      const Rational& beta, const Rational& epsilon) {
    const long n = static_cast<long>(g.size());
    if (n == 0) throw Error("empty graph");
    if (epsilon.sgn() <= 0) throw Error("epsilon must be positive");
    // 1/poly(n) guard, pinned to n^3.
    if (epsilon < Rational(1, std::max(1L, n * n * n))) throw Error("epsilon below the 1/n^3 guard");
    if (!g.integer_weights()) throw Error("framework needs integer weights");
    FrameworkConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.epsilon = epsilon;
    cfg.max_weight = 0;
    for (int v : g.vertices()) cfg.max_weight = std::max(cfg.max_weight, mpz_class(g.weight(v).num()));
    if (cfg.max_weight > 1000000000) throw Error("weights above the 10^9 practicality guard");
    Rational ab = alpha * beta;
    cfg.delta = epsilon / (alpha * (ab + epsilon));
    cfg.roundings = rat_ceil(Rational(2) * kLn2Upper / cfg.delta);
    cfg.iterations = cfg.max_weight * n;
    cfg.repetitions = ceil_log2(mpz_class(cfg.iterations * n));
    if (cfg.repetitions < 1) cfg.repetitions = 1;
    return cfg;
}

StepResult certified_step(const WeightedGraph& g, const VertexSet& s, RelaxationPlug& plug,
                          const FrameworkConfig& cfg, Rng& rng) {
    if (!g.integer_weights()) throw Error("framework needs integer weights");
    if (!is_independent(g, s)) throw Error("current solution must be independent");
    const Rational ab = cfg.alpha * cfg.beta;
    Perturbation pert;
    pert.gamma = ab + cfg.epsilon;
    for (int v : s) pert.multiplier[v] = ab;
    WeightedGraph perturbed = apply_perturbation(g, pert);
    Rational value = plug.solve(perturbed);
    Rational sw = perturbed.weight_of(s);
    if (value == sw) {
        // S is optimal for the (alpha*beta)-perturbation; report the
        // theorem's gamma = alpha*beta + epsilon with the same multipliers.
        return {StepResult::Kind::Certified, {}, Certificate{s, pert}};
    }
    if (value < sw) throw Error("relaxation value below its own integral point");
    VertexSet best;
    Rational best_w(-1);
    mpz_class m = cfg.roundings;
    for (mpz_class i = 0; i < m; ++i) {
        Rng sub = rng.derive(i.get_ui());
        VertexSet cand = plug.round(sub);
        Rational w = g.weight_of(cand);
        if (w > best_w || (w == best_w && cand < best)) {
            best = cand;
            best_w = w;
        }
    }
    if (best_w > g.weight_of(s)) return {StepResult::Kind::Improved, best, {}};
    return {StepResult::Kind::Failed, {}, {}};
}

std::string FrameworkResult::trace_tsv() const {
    std::ostringstream os;
    os << "iteration\tweight\taction\n";
    for (const auto& r : trace) os << r.iteration << '\t' << r.weight << '\t' << r.action << '\n';
    return os.str();
}

FrameworkResult certified_solve(const WeightedGraph& g, RelaxationPlug& plug,
                                const Rational& epsilon, std::uint64_t seed) {
    FrameworkConfig cfg = FrameworkConfig::make(g, plug.alpha(), plug.beta(), epsilon);
    FrameworkResult res;
    VertexSet s = greedy_solution(g);
    Rng root(seed);
    res.trace.push_back({0, g.weight_of(s), "greedy-start"});
    long iter = 0;
    for (mpz_class it = 0; it < cfg.iterations; ++it) {
        ++iter;
        bool progressed = false;
        for (mpz_class rep = 0; rep < cfg.repetitions; ++rep) {
            Rng rng = root.derive(static_cast<std::uint64_t>(iter) * 1000003ull + rep.get_ui());
            StepResult r = certified_step(g, s, plug, cfg, rng);
            if (r.kind == StepResult::Kind::Certified) {
                res.certificate = r.certificate;
                res.trace.push_back({iter, g.weight_of(s), "certified"});
                res.iterations = iter;
                return res;
            }
            if (r.kind == StepResult::Kind::Improved) {
                if (g.weight_of(r.improved) <= g.weight_of(s))
                    throw Error("improvement did not increase weight (internal error)");
                s = r.improved;
                res.trace.push_back({iter, g.weight_of(s), "improved"});
                progressed = true;
                break;
            }
        }
        if (!progressed) res.trace.push_back({iter, g.weight_of(s), "step-failed"});
    }
    res.iterations = iter;
    res.trace.push_back({iter, g.weight_of(s), "cap-reached"});
    return res;
}

}  // namespace stabilis
