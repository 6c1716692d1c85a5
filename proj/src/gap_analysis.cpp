#include "stabilis/gap_analysis.hpp"

#include <sstream>

#include "stabilis/oracle.hpp"
#include "stabilis/standard_lp.hpp"

namespace stabilis {

IgReport ig_check(const WeightedGraph& g, const Rational& alpha, const Rational& beta, int limit) {
    if (alpha < Rational(1) || beta <= Rational(1)) throw Error("ig_check needs alpha >= 1, beta > 1");
    IgReport r;
    r.lp_value = solve_standard_lp(g, LPMethod::NemhauserTrotter).value;
    StabilityReport rep = stability_threshold(g, limit);
    r.opt_weight = rep.optimum_weight;
    r.threshold = rep.threshold;
    r.ratio = r.lp_value / r.opt_weight;
    Rational alt = Rational(1) + Rational(1) / (beta - Rational(1));
    r.bound = alpha < alt ? alpha : alt;
    r.premise = rep.is_stable(alpha * beta);
    r.pass = !r.premise || r.ratio <= r.bound;
    return r;
}

EstimateReport vc_estimate(const WeightedGraph& g, const Rational& alpha, const Rational& beta) {
    if (alpha < Rational(1) || beta <= Rational(1))
        throw Error("vc_estimate needs alpha >= 1, beta > 1");
    GraphLPSolution lp = solve_standard_lp(g, LPMethod::NemhauserTrotter);
    if (!lp.half_integral()) throw Error("NT solution must be half-integral");
    EstimateReport r;
    r.v0 = lp.zeros();
    r.vhalf = lp.halves();
    r.v1 = lp.ones();
    Rational bb = beta / (beta - Rational(1));
    r.a_factor = alpha < bb ? alpha : bb;
    r.frac = r.vhalf.empty() ? Rational(0)
                             : solve_standard_lp(g.induced(r.vhalf), LPMethod::NemhauserTrotter).value;
    Rational w0 = g.weight_of(r.v0);
    Rational wh = g.weight_of(r.vhalf);
    r.e_value = w0 + (wh - r.frac);
    r.two_approx = w0 + wh;
    if (r.a_factor < Rational(2)) {
        r.bracket_hi = r.e_value / (Rational(2) - r.a_factor);
        r.estimate = *r.bracket_hi < r.two_approx ? *r.bracket_hi : r.two_approx;
    } else {
        r.estimate = r.two_approx;
    }
    return r;
}

std::string ig_report_tsv_header() {
    return "instance\tthreshold\tlp\topt\tratio\tbound\tpremise\tverdict\n";
}

std::string ig_report_tsv_row(const std::string& instance_id, const IgReport& r) {
    std::ostringstream os;
    os << instance_id << '\t' << (r.threshold ? r.threshold->str() : std::string("inf")) << '\t'
       << r.lp_value << '\t' << r.opt_weight << '\t' << r.ratio << '\t' << r.bound << '\t'
       << (r.premise ? "stable" : "unstable") << '\t' << (r.pass ? "pass" : "FAIL") << '\n';
    return os.str();
}

}  // namespace stabilis
