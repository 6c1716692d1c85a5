#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "stabilis/graph.hpp"
#include "stabilis/rng.hpp"

namespace stabilis {

// Relaxation + rounding pair plugged into the iterative certified solver.
// solve() prepares internal rounding state for the given (perturbed) weights
// and returns the exact relaxation value; round() then draws one feasible
// independent set.
class RelaxationPlug {
public:
    virtual ~RelaxationPlug() = default;
    virtual Rational solve(const WeightedGraph& perturbed) = 0;
    virtual VertexSet round(Rng& rng) = 0;
    virtual Rational alpha() const = 0;
    virtual Rational beta() const = 0;
    virtual std::string name() const = 0;

    Rational alpha_beta() const { return alpha() * beta(); }
};

// Standard LP (Nemhauser-Trotter route) + Hochbaum rounding. k is the
// Welsh-Powell color count of the input graph, clamped to >= 2 so the
// perturbation factor alpha*beta = k-1 stays a valid multiplier.
std::unique_ptr<RelaxationPlug> make_hochbaum_plug(const WeightedGraph& g);

// Sherali-Adams at the given level + Baker-layer planar rounding with
// window parameter k. Slab marginals are checked against the slab hulls at
// solve time (NotInHullError when the level is too low for the layering).
std::unique_ptr<RelaxationPlug> make_planar_plug(const WeightedGraph& g, int k, int sa_level);

struct FrameworkConfig {
    Rational alpha, beta, epsilon;
    mpz_class max_weight;  // W
    Rational delta;        // epsilon / (alpha * (alpha*beta + epsilon))
    mpz_class roundings;   // M = ceil(2 ln2 / delta), ln2 over-approximated
    mpz_class iterations;  // T = n * W
    mpz_class repetitions; // t = ceil(log2(n * T))

    static FrameworkConfig make(const WeightedGraph& g, const Rational& alpha,
                                const Rational& beta, const Rational& epsilon);
};

struct StepResult {
    enum class Kind { Improved, Certified, Failed } kind;
    VertexSet improved;
    Certificate certificate;
};

// One framework step: perturb the current solution's weights by alpha*beta,
// re-solve the relaxation; exact value equality certifies, otherwise the
// best of M roundings either improves or reports a probabilistic miss.
StepResult certified_step(const WeightedGraph& g, const VertexSet& s, RelaxationPlug& plug,
                          const FrameworkConfig& cfg, Rng& rng);

struct TraceRow {
    long iteration;
    Rational weight;
    std::string action;
};

struct FrameworkResult {
    std::optional<Certificate> certificate;  // gamma = alpha*beta + epsilon
    std::vector<TraceRow> trace;
    long iterations = 0;

    std::string trace_tsv() const;
};

// Iterated certified solver: greedy start, t-fold step repetition per
// iteration, at most T iterations. Strict integer-weight progress on every
// improvement is a hard assertion. A run that exhausts the cap returns no
// certificate (expected with probability <= 1/n).
FrameworkResult certified_solve(const WeightedGraph& g, RelaxationPlug& plug,
                                const Rational& epsilon, std::uint64_t seed);

}  // namespace stabilis
