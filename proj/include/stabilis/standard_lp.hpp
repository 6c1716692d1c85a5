#pragma once

#include <map>
#include <optional>

#include "stabilis/graph.hpp"
#include "stabilis/lp.hpp"

namespace stabilis {

// LP solution projected onto graph vertices.
struct GraphLPSolution {
    Rational value;
    std::map<int, Rational> x;  // vertex id -> value

    bool integral() const;
    bool half_integral() const;
    // Vertices with x == 1 (requires integral or half-integral use).
    VertexSet ones() const;
    VertexSet halves() const;
    VertexSet zeros() const;
};

// max sum w_u x_u  s.t.  x_u + x_v <= 1 on edges, x in [0,1]^V.
LinearProgram build_standard_lp(const WeightedGraph& g);

enum class LPMethod {
    Simplex,
    // Bipartite doubling + minimum-weight vertex cover by maximum flow;
    // integral there by Koenig duality, mapped back to a half-integral x.
    NemhauserTrotter,
};

GraphLPSolution solve_standard_lp(const WeightedGraph& g,
                                  LPMethod method = LPMethod::NemhauserTrotter);

struct Relaxation {
    enum class Kind { StandardLP, SheraliAdams };
    Kind kind = Kind::StandardLP;
    int level = 0;  // SA level when kind == SheraliAdams

    static Relaxation standard() { return {Kind::StandardLP, 0}; }
    static Relaxation sa(int t) { return {Kind::SheraliAdams, t}; }
};

// Solve the relaxation; if the (projected) optimum is integral report the
// 1-set as the optimum, otherwise report NotStable (nullopt). Never wrong:
// an integral relaxation optimum is a maximum independent set.
std::optional<VertexSet> robust_solve(const WeightedGraph& g,
                                      Relaxation rel = Relaxation::standard());

}  // namespace stabilis
