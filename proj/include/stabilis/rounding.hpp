#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "stabilis/graph.hpp"
#include "stabilis/rng.hpp"
#include "stabilis/standard_lp.hpp"

namespace stabilis {

// Descriptor of a scheme together with its claimed per-vertex guarantees:
// Pr[u in S] >= bound_in(x_u) and Pr[u not in S] <= bound_out(x_u). The
// claimed alpha/beta pairs are pinned to the schemes: Hochbaum (k/2,
// 2(k-1)/k), planar (k/(k-1), (k+1)/k); the planar inclusion bound keeps
// its quadratic term.
struct RoundingScheme {
    enum class Kind { Hochbaum, Planar };
    Kind kind;
    int k;
    Rational alpha, beta;

    static RoundingScheme hochbaum(int k);
    static RoundingScheme planar(int k);

    Rational bound_in(const Rational& x) const;
    Rational bound_out(const Rational& x) const;
};

// Hochbaum's k-colorable rounding of a half-integral solution: keep the
// 1-vertices and one uniformly chosen color class of the half-vertices.
// k defaults to the number of colors in `coloring`; a larger k dilutes the
// per-class probability to 1/k (classes beyond the coloring are empty).
VertexSet hochbaum_round(const WeightedGraph& g, const GraphLPSolution& sol,
                         const std::map<int, int>& coloring, Rng& rng, int k = 0);

// Baker slabs for layered graphs: slab 0 is layers 0..j, slab i >= 1 is the
// window of layers (i-1)k+j .. ik+j (trimmed to existing layers). Vertices
// on layers congruent to j mod k appear in two adjacent slabs.
std::vector<VertexSet> baker_decompose(const WeightedGraph& g, int k, int j);

// Convex combination of independent sets with prescribed exact marginals.
struct Mixture {
    std::vector<std::pair<VertexSet, Rational>> entries;  // probability > 0, sums to 1

    // Cumulative probabilities for exact inverse-CDF sampling.
    std::vector<Rational> cdf() const;
    VertexSet sample(Rng& rng) const;
};

// Decomposes y over the independent sets of h (found by a feasibility LP);
// nullopt certifies that y is outside the independent-set polytope of h.
std::optional<Mixture> marginals_to_mixture(const WeightedGraph& h,
                                            const std::map<int, Rational>& y,
                                            int enumeration_limit = 24);

struct NotInHullError : Error {
    int slab_index;
    NotInHullError(int slab, const std::string& msg) : Error(msg), slab_index(slab) {}
};

// Prepared planar rounding: slab decompositions and slab mixtures for every
// possible offset j, so repeated sampling is cheap.
class PlanarScheme {
public:
    PlanarScheme(const WeightedGraph& g, int k, std::map<int, Rational> y,
                 int enumeration_limit = 24);

    // Draw j uniformly, sample each slab's mixture independently, keep a
    // vertex iff it is present in every slab sample that contains it.
    VertexSet sample(Rng& rng) const;

    const std::map<int, Rational>& marginals() const { return y_; }

private:
    const WeightedGraph* g_;
    int k_;
    std::map<int, Rational> y_;
    // per j: slabs and their mixtures
    std::vector<std::vector<VertexSet>> slabs_;
    std::vector<std::vector<Mixture>> mixtures_;
};

VertexSet planar_round(const WeightedGraph& g, int k, const std::map<int, Rational>& y,
                       std::uint64_t seed);

// Empirical (alpha, beta) property check over seeded trials.
struct RoundingReportRow {
    int vertex;
    Rational x;
    Rational emp_in, bound_in;    // empirical Pr[u in S] and its claimed bound
    Rational emp_out, bound_out;  // empirical Pr[u not in S] and its claimed bound
    bool ok;
};

struct RoundingReport {
    std::uint64_t trials = 0;
    std::vector<RoundingReportRow> rows;
    bool all_ok = true;

    std::string to_tsv() const;
};

// Runs `trials` samples with per-trial derived generators and compares the
// empirical per-vertex frequencies to the claimed bounds, flagging
// deviations beyond 4 binomial standard deviations (exact comparison).
// When `minimization` is false, bound_in is a lower bound on Pr[u in S] and
// bound_out an upper bound on Pr[u not in S]; minimization flips both.
// Trials derive an independent generator from (seed, trial index), so
// parallel (jobs > 1) and serial runs produce identical statistics; the
// sampler must be safe for concurrent calls over shared immutable state.
RoundingReport check_rounding_properties(const std::function<VertexSet(Rng&)>& sampler,
                                         const std::map<int, Rational>& x,
                                         const std::function<Rational(const Rational&)>& bound_in,
                                         const std::function<Rational(const Rational&)>& bound_out,
                                         std::uint64_t trials, std::uint64_t seed,
                                         bool minimization = false, int jobs = 1);

// Convenience overload taking the bounds from a scheme descriptor.
RoundingReport check_rounding_properties(const RoundingScheme& scheme,
                                         const std::function<VertexSet(Rng&)>& sampler,
                                         const std::map<int, Rational>& x, std::uint64_t trials,
                                         std::uint64_t seed, int jobs = 1);

}  // namespace stabilis
