#include "stabilis/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stabilis/framework.hpp"
#include "stabilis/gap_analysis.hpp"
#include "stabilis/generators.hpp"
#include "stabilis/greedy.hpp"
#include "stabilis/local_search.hpp"
#include "stabilis/multiway_cut.hpp"
#include "stabilis/oracle.hpp"
#include "stabilis/rounding.hpp"
#include "stabilis/sherali_adams.hpp"
#include "stabilis/stable_solvers.hpp"
#include "stabilis/standard_lp.hpp"

namespace stabilis {

namespace {

OracleLimits env_limits() {
    OracleLimits lim;
    if (const char* s = std::getenv("STABILIS_ORACLE_LIMIT")) {
        int v = std::atoi(s);
        if (v > 0) {
            lim.mis = v;
            lim.enumerate = v;
        }
    }
    return lim;
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_graph(in);
}

NMCInstance load_nmc(const std::string& path, std::istream& fallback) {
    if (path.empty()) return parse_nmc(fallback);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_nmc(in);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write " + out_path);
    f << text;
}

std::string solution_line(const VertexSet& s) {
    std::ostringstream os;
    os << "solution";
    for (int v : s) os << ' ' << v;
    os << '\n';
    return os.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stabilis: stability analysis and certified algorithms for independent set,"
                 " vertex cover, and node multiway cut"};
    app.require_subcommand(1);
    const OracleLimits lim = env_limits();

    std::string graph_path, cert_path, out_path, instance_path;
    std::string alg, method = "nt", plug_name = "hochbaum", scheme, name, route = "enum";
    std::string alpha_s = "1", beta_s = "2", epsilon_s = "1/2", gamma_s = "1";
    int k = 2, sa_level = -1, baker_k = 2, n = 10, planted_k = 3, delta = 0;
    long sigma = 0;
    std::uint64_t seed = 1, trials = 10000;
    int jobs = 1;

    auto* solve = app.add_subcommand("solve", "run an algorithm and print its output");
    solve->add_option("--alg", alg)->required()
        ->check(CLI::IsMember({"greedy", "modified-greedy", "bounded", "unbounded", "bf",
                               "robust-lp", "robust-deg", "certified"}));
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--k", k);
    solve->add_option("--epsilon", epsilon_s);
    solve->add_option("--seed", seed);
    solve->add_option("--out", out_path);
    solve->add_option("--plug", plug_name)->check(CLI::IsMember({"hochbaum", "planar"}));
    solve->add_option("--sa", sa_level);
    solve->add_option("--baker-k", baker_k);
    solve->add_option("--delta", delta);
    solve->add_option("--sigma", sigma);
    bool want_trace = false;
    solve->add_flag("--trace", want_trace);
    std::string approx = "exact";
    solve->add_option("--approx", approx)->check(CLI::IsMember({"exact", "greedy"}));

    auto* stability = app.add_subcommand("stability", "exact stability threshold");
    stability->add_option("--graph", graph_path)->required();

    auto* verify = app.add_subcommand("verify", "verify a certificate");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--cert", cert_path)->required();
    verify->add_option("--route", route)->check(CLI::IsMember({"enum", "oracle"}));

    auto* lp = app.add_subcommand("lp", "solve the standard LP or a Sherali-Adams level");
    lp->add_option("--graph", graph_path)->required();
    lp->add_option("--method", method)->check(CLI::IsMember({"nt", "simplex"}));
    lp->add_option("--sa", sa_level);
    lp->add_option("--out", out_path);

    auto* nmc = app.add_subcommand("nmc", "node multiway cut commands");
    nmc->require_subcommand(1);
    auto* nmc_solve = nmc->add_subcommand("solve", "exact minimum cut and threshold");
    auto* nmc_lp = nmc->add_subcommand("lp", "path LP by cutting planes");
    auto* nmc_round_cmd = nmc->add_subcommand("round", "half-integral rounding");
    auto* nmc_robust = nmc->add_subcommand("robust", "LP-integrality robust solver");
    auto* nmc_gap = nmc->add_subcommand("gap", "emit a gap-family instance");
    auto* nmc_fromvc = nmc->add_subcommand("from-vc", "emit the vertex-cover reduction");
    for (auto* c : {nmc_solve, nmc_lp, nmc_round_cmd, nmc_robust})
        c->add_option("--instance", instance_path);
    nmc_round_cmd->add_option("--seed", seed);
    nmc_gap->add_option("--k", k)->required();
    nmc_gap->add_option("--epsilon", epsilon_s)->required();
    nmc_fromvc->add_option("--graph", graph_path)->required();
    for (auto* c : {nmc_solve, nmc_lp, nmc_round_cmd, nmc_robust, nmc_gap, nmc_fromvc})
        c->add_option("--out", out_path);

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* gen_planted = gen->add_subcommand("planted", "planted independent set in G(n,1/2)");
    gen_planted->add_option("--n", n)->required();
    gen_planted->add_option("--k", planted_k)->required();
    gen_planted->add_option("--seed", seed);
    auto* gen_boost = gen->add_subcommand("boost", "boost an instance to a stability target");
    gen_boost->add_option("--graph", graph_path)->required();
    gen_boost->add_option("--gamma", gamma_s)->required();
    gen_boost->add_option("--seed", seed);
    auto* gen_fixture = gen->add_subcommand("fixture", "emit a named fixture");
    gen_fixture->add_option("--name", name)->required();
    for (auto* c : {gen_planted, gen_boost, gen_fixture}) c->add_option("--out", out_path);

    auto* est = app.add_subcommand("estimate-vc", "vertex cover estimation report");
    est->add_option("--graph", graph_path)->required();
    est->add_option("--alpha", alpha_s)->required();
    est->add_option("--beta", beta_s)->required();

    auto* chk = app.add_subcommand("check-rounding", "empirical (alpha,beta) property report");
    chk->add_option("--scheme", scheme)->required()
        ->check(CLI::IsMember({"hochbaum", "planar", "nmc"}));
    chk->add_option("--graph", graph_path);
    chk->add_option("--instance", instance_path);
    chk->add_option("--trials", trials);
    chk->add_option("--seed", seed);
    chk->add_option("--sa", sa_level);
    chk->add_option("--baker-k", baker_k);
    chk->add_option("--jobs", jobs);
    chk->add_option("--out", out_path);

    std::vector<const char*> argv;
    argv.push_back("stabilis");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (solve->parsed()) {
            WeightedGraph g = load_graph(graph_path);
            if (alg == "greedy") {
                emit(render_certificate(greedy_certified(g)), out_path, out);
            } else if (alg == "modified-greedy") {
                int d = delta > 0 ? delta : std::max(3, g.max_degree());
                emit(render_certificate(modified_greedy(g, d)), out_path, out);
            } else if (alg == "bf") {
                BFConfig cfg;
                cfg.sigma = sigma;
                cfg.k = solve->count("--k") ? std::max(1, k) : 1;
                emit(render_certificate(bf_solve(g, cfg)), out_path, out);
            } else if (alg == "bounded") {
                ApproxOracle oracle =
                    approx == "exact" ? exact_approx_oracle(lim.mis) : greedy_approx_oracle(g);
                if (approx == "greedy")
                    err << "warning: greedy approximation makes gamma = ceil(sqrt(2)*Delta) "
                           "exceed Delta; the stability premise gamma <= Delta fails\n";
                auto s = bounded_alg(g, oracle);
                if (!s) {
                    out << "not-stable\n";
                    return 2;
                }
                emit(solution_line(*s), out_path, out);
            } else if (alg == "unbounded") {
                emit(solution_line(unbounded_alg(g, k)), out_path, out);
            } else if (alg == "robust-lp") {
                auto s = robust_solve(g, sa_level >= 0 ? Relaxation::sa(sa_level)
                                                       : Relaxation::standard());
                if (!s) {
                    out << "not-stable\n";
                    return 2;
                }
                emit(solution_line(*s), out_path, out);
            } else if (alg == "robust-deg") {
                auto s = robust_bounded_degree(g);
                if (!s) {
                    out << "not-stable\n";
                    return 2;
                }
                emit(solution_line(*s), out_path, out);
            } else if (alg == "certified") {
                std::unique_ptr<RelaxationPlug> plug =
                    plug_name == "hochbaum"
                        ? make_hochbaum_plug(g)
                        : make_planar_plug(g, baker_k, sa_level >= 0 ? sa_level : 3);
                FrameworkResult r = certified_solve(g, *plug, parse_rational(epsilon_s), seed);
                if (want_trace) err << r.trace_tsv();
                if (!r.certificate) {
                    err << "probabilistic failure: iteration cap reached\n";
                    return 1;
                }
                emit(render_certificate(*r.certificate), out_path, out);
            }
            return 0;
        }
        if (stability->parsed()) {
            WeightedGraph g = load_graph(graph_path);
            StabilityReport r = stability_threshold(g, lim.enumerate);
            if (!r.threshold) {
                out << "threshold inf\n";
            } else {
                out << "threshold " << *r.threshold << " witness";
                for (int v : *r.witness) out << ' ' << v;
                out << '\n';
            }
            return 0;
        }
        if (verify->parsed()) {
            WeightedGraph g = load_graph(graph_path);
            std::ifstream cf(cert_path);
            if (!cf) throw Error("cannot open " + cert_path);
            Certificate c = parse_certificate(cf);
            bool ok = verify_certificate(
                g, c, route == "enum" ? VerifyRoute::Enumerate : VerifyRoute::PerturbedOracle,
                lim.mis);
            out << (ok ? "valid\n" : "invalid\n");
            return ok ? 0 : 1;
        }
        if (lp->parsed()) {
            WeightedGraph g = load_graph(graph_path);
            std::ostringstream os;
            if (sa_level >= 0) {
                auto [sa, proj] = sherali_adams_solve(g, sa_level);
                (void)sa;
                os << "value " << proj.value << '\n';
                for (const auto& [v, xv] : proj.x) os << "x " << v << ' ' << xv << '\n';
            } else {
                GraphLPSolution sol = solve_standard_lp(
                    g, method == "nt" ? LPMethod::NemhauserTrotter : LPMethod::Simplex);
                os << "value " << sol.value << '\n';
                for (const auto& [v, xv] : sol.x) os << "x " << v << ' ' << xv << '\n';
            }
            emit(os.str(), out_path, out);
            return 0;
        }
        if (nmc->parsed()) {
            if (nmc_gap->parsed()) {
                emit(render_nmc(gap_instance(k, parse_rational(epsilon_s))), out_path, out);
                return 0;
            }
            if (nmc_fromvc->parsed()) {
                emit(render_nmc(vc_to_nmc(load_graph(graph_path))), out_path, out);
                return 0;
            }
            NMCInstance inst = load_nmc(instance_path, std::cin);
            if (nmc_solve->parsed()) {
                NMCExact e = exact_nmc(inst, lim.enumerate);
                std::ostringstream os;
                os << solution_line(e.cut) << "weight " << e.weight << '\n'
                   << "threshold " << (e.threshold ? e.threshold->str() : std::string("inf"))
                   << '\n';
                emit(os.str(), out_path, out);
            } else if (nmc_lp->parsed()) {
                NMCLPSolution sol = nmc_lp_solve(inst);
                std::ostringstream os;
                os << "value " << sol.value << '\n';
                for (const auto& [v, xv] : sol.x) os << "x " << v << ' ' << xv << '\n';
                emit(os.str(), out_path, out);
            } else if (nmc_round_cmd->parsed()) {
                NMCHalfIntegral h = nmc_half_integral(inst);
                emit(solution_line(nmc_round_seeded(inst, h, seed)), out_path, out);
            } else if (nmc_robust->parsed()) {
                auto s = robust_nmc(inst);
                if (!s) {
                    out << "not-stable\n";
                    return 2;
                }
                emit(solution_line(*s), out_path, out);
            }
            return 0;
        }
        if (gen->parsed()) {
            if (gen_planted->parsed()) {
                auto [g, planted] = planted_instance(n, planted_k, seed);
                std::ostringstream os;
                os << "# planted:";
                for (int v : planted) os << ' ' << v;
                os << '\n' << render_graph(g);
                emit(os.str(), out_path, out);
            } else if (gen_boost->parsed()) {
                WeightedGraph g = load_graph(graph_path);
                emit(render_graph(boost_to_stable(g, parse_rational(gamma_s), lim.enumerate)),
                     out_path, out);
            } else {
                Fixture f = fixture_suite(name);
                emit(f.graph ? render_graph(*f.graph) : render_nmc(*f.nmc), out_path, out);
            }
            return 0;
        }
        if (est->parsed()) {
            WeightedGraph g = load_graph(graph_path);
            EstimateReport r = vc_estimate(g, parse_rational(alpha_s), parse_rational(beta_s));
            out << "A\t" << r.a_factor << '\n';
            out << "FRAC\t" << r.frac << '\n';
            out << "E\t" << r.e_value << '\n';
            out << "bracket\t" << r.bracket_lo() << '\t'
                << (r.bracket_hi ? r.bracket_hi->str() : std::string("-")) << '\n';
            out << "estimate\t" << r.estimate << '\n';
            return 0;
        }
        if (chk->parsed()) {
            RoundingReport rep;
            if (scheme == "hochbaum") {
                WeightedGraph g = load_graph(graph_path);
                GraphLPSolution sol = solve_standard_lp(g, LPMethod::NemhauserTrotter);
                std::map<int, int> coloring = welsh_powell(g.induced(sol.halves())).color;
                int kk = 2;
                for (const auto& [v, c] : coloring) kk = std::max(kk, c);
                rep = check_rounding_properties(
                    RoundingScheme::hochbaum(kk),
                    [&](Rng& rng) { return hochbaum_round(g, sol, coloring, rng, kk); }, sol.x,
                    trials, seed, jobs);
            } else if (scheme == "planar") {
                WeightedGraph g = load_graph(graph_path);
                auto [sa, proj] = sherali_adams_solve(g, sa_level >= 0 ? sa_level : 3);
                (void)sa;
                PlanarScheme ps(g, baker_k, proj.x);
                rep = check_rounding_properties(
                    RoundingScheme::planar(baker_k),
                    [&](Rng& rng) { return ps.sample(rng); }, proj.x, trials, seed, jobs);
            } else {
                NMCInstance inst = load_nmc(instance_path, std::cin);
                NMCHalfIntegral h = nmc_half_integral(inst);
                const long tk = inst.k();
                std::map<int, Rational> x;
                for (int v : inst.non_terminals()) x[v] = h.sol.x.at(v);
                rep = check_rounding_properties(
                    [&](Rng& rng) { return nmc_round(inst, h, rng); }, x,
                    [tk](const Rational& xv) { return Rational(2 * (tk - 1), tk) * xv; },
                    [tk](const Rational& xv) { return Rational(2, tk) * (Rational(1) - xv); },
                    trials, seed, /*minimization=*/true, jobs);
            }
            emit(rep.to_tsv(), out_path, out);
            return rep.all_ok ? 0 : 1;
        }
        err << "unknown subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace stabilis
