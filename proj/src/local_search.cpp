#include "stabilis/local_search.hpp"

#include <algorithm>

#include "stabilis/greedy.hpp"

namespace stabilis {

Rational BFConfig::gamma(int delta) const {
    Rational g = Rational(delta + 1, 3) + epsilon();
    return g < Rational(1) ? Rational(1) : g;
}

mpz_class bf_sigma_formula(int k, int delta, int n) {
    mpz_class d(std::max(1, delta));
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), d.get_mpz_t(), 4u * static_cast<unsigned>(k));
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;  // ceil(log2 n)
    return 32 * k * pw * std::max(1, log2n);
}

namespace {

void require_unit_weights(const WeightedGraph& g) {
    for (int v : g.vertices())
        if (g.weight(v) != Rational(1)) throw Error("Berman-Fuerer requires unit weights");
}

bool is_improvement(const WeightedGraph& g, const VertexSet& i, const VertexSet& x) {
    VertexSet swapped = i.symmetric_difference(x);
    return swapped.size() > i.size() && is_independent(g, swapped);
}

// Canonical connected-subset enumeration: subsets with minimum id r are
// grown from r, extension candidates offered in ascending order, and a
// candidate is banned for the later branches of its own level (bans do not
// escape a subtree), so every connected subset appears exactly once.
bool grow(const WeightedGraph& g, const VertexSet& i, long sigma, int root, VertexSet& x,
          const std::vector<int>& ext, VertexSet banned, std::optional<VertexSet>& found) {
    if (is_improvement(g, i, x)) {
        found = x;
        return true;
    }
    if (static_cast<long>(x.size()) >= sigma) return false;
    for (std::size_t idx = 0; idx < ext.size(); ++idx) {
        int c = ext[idx];
        if (banned.contains(c)) continue;
        std::vector<int> next(ext.begin() + idx + 1, ext.end());
        for (int w : g.neighbors(c)) {
            if (w <= root || x.contains(w) || banned.contains(w)) continue;
            if (std::find(ext.begin(), ext.end(), w) != ext.end()) continue;
            next.push_back(w);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        x.insert(c);
        if (grow(g, i, sigma, root, x, next, banned, found)) return true;
        x.erase(c);
        banned.insert(c);
    }
    return false;
}

}  // namespace

std::optional<VertexSet> find_improvement(const WeightedGraph& g, const VertexSet& i, long sigma) {
    require_unit_weights(g);
    if (!is_independent(g, i)) throw Error("find_improvement needs an independent set");
    if (sigma < 1) return std::nullopt;
    for (int r : g.vertices()) {
        VertexSet x;
        x.insert(r);
        std::vector<int> ext;
        for (int w : g.neighbors(r))
            if (w > r) ext.push_back(w);
        VertexSet banned;
        std::optional<VertexSet> found;
        if (grow(g, i, sigma, r, x, ext, banned, found)) return found;
    }
    return std::nullopt;
}

Certificate bf_solve(const WeightedGraph& g, const BFConfig& cfg, std::optional<VertexSet> start) {
    require_unit_weights(g);
    VertexSet i = start ? *start : greedy_solution(g);
    if (!is_independent(g, i)) throw Error("start set must be independent");
    long sigma = cfg.sigma;
    if (sigma <= 0 || sigma > static_cast<long>(g.size()))
        sigma = static_cast<long>(g.size());
    for (;;) {
        auto x = find_improvement(g, i, sigma);
        if (!x) break;
        i = i.symmetric_difference(*x);
    }
    Certificate c;
    c.solution = i;
    Rational gamma = cfg.gamma(g.max_degree());
    c.perturbation.gamma = gamma;
    for (int v : i) c.perturbation.multiplier[v] = gamma;
    return c;
}

}  // namespace stabilis
