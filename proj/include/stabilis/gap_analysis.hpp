#pragma once

#include <optional>

#include "stabilis/graph.hpp"

namespace stabilis {

// Integrality-gap-under-stability check for one instance: either the
// stability premise fails (vacuous pass) or the LP/OPT ratio must respect
// min{alpha, 1 + 1/(beta-1)}.
struct IgReport {
    Rational lp_value;
    Rational opt_weight;
    std::optional<Rational> threshold;
    Rational ratio;   // lp_value / opt_weight
    Rational bound;   // min{alpha, 1 + 1/(beta-1)}
    bool premise;     // threshold > alpha*beta
    bool pass;
};

IgReport ig_check(const WeightedGraph& g, const Rational& alpha, const Rational& beta,
                  int limit = 20);

// Vertex Cover estimation via the half-integral partition.
struct EstimateReport {
    Rational a_factor;                  // A = min{alpha, beta/(beta-1)}
    Rational frac;                      // LP value on G[V_1/2]
    Rational e_value;                   // w(V_0) + (w(V_1/2) - FRAC)
    std::optional<Rational> bracket_hi; // E / (2 - A), defined when A < 2
    Rational two_approx;                // w(V_0) + w(V_1/2)
    Rational estimate;                  // min of the defined over-estimates
    VertexSet v0, vhalf, v1;

    Rational bracket_lo() const { return e_value; }
};

EstimateReport vc_estimate(const WeightedGraph& g, const Rational& alpha, const Rational& beta);

std::string ig_report_tsv_header();
std::string ig_report_tsv_row(const std::string& instance_id, const IgReport& r);

}  // namespace stabilis
