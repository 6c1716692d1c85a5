#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "stabilis/graph.hpp"
#include "stabilis/rng.hpp"

namespace stabilis {

// Node Multiway Cut instance: connected graph, k >= 2 pairwise non-adjacent
// terminals; a feasible cut removes non-terminals so no two terminals stay
// connected.
struct NMCInstance {
    WeightedGraph graph;
    std::vector<int> terminals;  // ordered s_1..s_k

    int k() const { return static_cast<int>(terminals.size()); }
    bool is_terminal(int v) const;
    VertexSet terminal_set() const { return VertexSet(terminals); }
    VertexSet non_terminals() const;

    void validate() const;
};

NMCInstance parse_nmc(std::istream& in);
NMCInstance parse_nmc(const std::string& text);
std::string render_nmc(const NMCInstance& inst);

bool nmc_feasible(const NMCInstance& inst, const VertexSet& cut);

struct NMCExact {
    VertexSet cut;
    Rational weight;
    std::optional<Rational> threshold;  // min w(X\X*)/w(X*\X); nullopt = infinite
    std::optional<VertexSet> witness;

    bool is_stable(const Rational& gamma) const {
        return !threshold.has_value() || *threshold > gamma;
    }
};

// Subset enumeration over the non-terminals with graph-search feasibility.
NMCExact exact_nmc(const NMCInstance& inst, int limit = 16);

struct NMCLPSolution {
    Rational value;
    std::map<int, Rational> x;  // all vertices; terminals pinned to 0

    bool integral() const;
    bool half_integral() const;
};

// Path LP by cutting planes: repeatedly add the most violated shortest-path
// constraint per terminal pair until every pairwise x-distance is >= 1.
NMCLPSolution nmc_lp_solve(const NMCInstance& inst);

// Optimal half-integral solution with the rounding structure attached.
struct NMCHalfIntegral {
    NMCLPSolution sol;
    VertexSet v0, vhalf, v1;
    std::vector<VertexSet> zero_regions;  // B_i per terminal (x=0 region around s_i)
    std::vector<VertexSet> boundaries;    // delta(B_i): half vertices adjacent to B_i
};

// Exhaustive search over {0,1/2,1}^(V\T); asserts exact value equality with
// the LP optimum and that every half vertex lies in exactly one boundary.
NMCHalfIntegral nmc_half_integral(const NMCInstance& inst, int limit = 13);

// X = V_1 union of all boundaries except one uniformly random index,
// drawn independently per connected component of G[V_0 u V_1/2].
VertexSet nmc_round(const NMCInstance& inst, const NMCHalfIntegral& h, Rng& rng);
VertexSet nmc_round_seeded(const NMCInstance& inst, const NMCHalfIntegral& h, std::uint64_t seed);

// LP integral => Optimum, else NotStable (nullopt); never a wrong answer.
std::optional<VertexSet> robust_nmc(const NMCInstance& inst);

// Pendant-terminal reduction: minimum vertex covers of g correspond to
// minimum node multiway cuts of the output at equal weight.
NMCInstance vc_to_nmc(const WeightedGraph& g);

// The star-variant integrality-gap family: spokes u_1..u_k (u_k lighter by
// eps/2), hub c of weight k^3, one terminal per spoke.
NMCInstance gap_instance(int k, const Rational& epsilon);

// Doubles the weights of the non-terminals outside the optimal cut until the
// measured threshold exceeds target_gamma.
NMCInstance boost_nmc_to_stable(const NMCInstance& inst, const Rational& target_gamma,
                                int limit = 16);

}  // namespace stabilis
