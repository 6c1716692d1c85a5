#include "stabilis/independence.hpp"

#include <algorithm>
#include <sstream>

namespace stabilis {

const Rational& IndependenceSystem::weight_of_element(int e) const {
    auto it = weight.find(e);
    if (it == weight.end()) throw Error("unknown element " + std::to_string(e));
    return it->second;
}

Rational IndependenceSystem::weight_of(const VertexSet& s) const {
    Rational sum;
    for (int e : s) sum += weight_of_element(e);
    return sum;
}

IndependenceSystem make_graph_system(const WeightedGraph& g) {
    IndependenceSystem sys;
    sys.name = "graph-is";
    sys.ground = g.vertices();
    sys.extendibility = std::max(1, g.max_degree());
    for (int v : g.vertices()) sys.weight[v] = g.weight(v);
    sys.feasible = [g](const VertexSet& s) { return is_independent(g, s); };
    return sys;
}

IndependenceSystem make_matching_system(const WeightedGraph& g,
                                        std::vector<Rational> edge_weights) {
    IndependenceSystem sys;
    sys.name = "matching";
    sys.extendibility = 2;
    const auto edges = g.edges();
    if (edge_weights.empty()) edge_weights.assign(edges.size(), Rational(1));
    if (edge_weights.size() != edges.size()) throw Error("edge weight count mismatch");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        sys.ground.push_back(static_cast<int>(i) + 1);
        if (edge_weights[i].sgn() <= 0) throw Error("edge weight must be positive");
        sys.weight[static_cast<int>(i) + 1] = edge_weights[i];
    }
    sys.feasible = [edges](const VertexSet& s) {
        VertexSet touched;
        for (int e : s) {
            auto [u, v] = edges[e - 1];
            if (touched.contains(u) || touched.contains(v)) return false;
            touched.insert(u);
            touched.insert(v);
        }
        return true;
    };
    return sys;
}

IndependenceSystem make_knapsack_system(const std::vector<KnapsackItem>& items,
                                        const Rational& capacity) {
    if (capacity.sgn() <= 0) throw Error("capacity must be positive");
    IndependenceSystem sys;
    sys.name = "knapsack";
    sys.extendibility = std::nullopt;
    std::map<int, Rational> sizes;
    for (const auto& it : items) {
        if (sys.weight.count(it.id)) throw Error("duplicate knapsack item id");
        if (it.value.sgn() <= 0 || it.size.sgn() <= 0)
            throw Error("knapsack values and sizes must be positive");
        sys.ground.push_back(it.id);
        sys.weight[it.id] = it.value;
        sizes[it.id] = it.size;
    }
    std::sort(sys.ground.begin(), sys.ground.end());
    Rational cap = capacity;
    sys.feasible = [sizes, cap](const VertexSet& s) {
        Rational total;
        for (int e : s) total += sizes.at(e);
        return total <= cap;
    };
    return sys;
}

std::pair<std::vector<KnapsackItem>, Rational> parse_knapsack(std::istream& in) {
    std::vector<KnapsackItem> items;
    std::optional<Rational> capacity;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag)) continue;
        if (tag == "c") continue;
        auto at = [&] { return " at line " + std::to_string(lineno); };
        if (tag == "p") {
            std::string kind;
            if (!(is >> kind) || kind != "knap") throw ParseError("expected 'p knap'" + at());
            have_header = true;
        } else if (tag == "i") {
            int id;
            std::string v, s;
            if (!(is >> id >> v >> s)) throw ParseError("malformed item" + at());
            items.push_back({id, parse_rational(v), parse_rational(s)});
        } else if (tag == "capacity") {
            std::string v;
            if (!(is >> v) || capacity) throw ParseError("bad capacity line" + at());
            capacity = parse_rational(v);
        } else {
            throw ParseError("malformed line" + at());
        }
    }
    if (!have_header) throw ParseError("missing 'p knap' header");
    if (!capacity) throw ParseError("missing capacity line");
    return {std::move(items), *capacity};
}

IndependenceSystem matching_tight_system() {
    WeightedGraph path = WeightedGraph::simple(4, {{1, 2}, {2, 3}, {3, 4}});
    return make_matching_system(path, {Rational(1), Rational(11, 10), Rational(1)});
}

IndependenceSystem knapsack_fixture_system() {
    std::vector<KnapsackItem> items{{1, Rational(2), Rational(1)}};
    for (int i = 2; i <= 6; ++i) items.push_back({i, Rational(1), Rational(1, 5)});
    return make_knapsack_system(items, Rational(1));
}

ElementCertificate greedy_p_extendible(const IndependenceSystem& sys) {
    std::vector<int> order = sys.ground;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sys.weight_of_element(a) > sys.weight_of_element(b);
    });
    VertexSet s;
    for (int e : order) {
        VertexSet trial = s;
        trial.insert(e);
        if (sys.feasible(trial)) s = trial;
    }
    Rational mult = sys.extendibility ? Rational(*sys.extendibility) : Rational(1);
    return {s, mult};
}

void enumerate_feasible_sets(const IndependenceSystem& sys,
                             const std::function<void(const VertexSet&)>& visit,
                             std::size_t set_limit) {
    if (sys.ground.size() > 8 * sizeof(std::size_t) - 1 ||
        (std::size_t{1} << sys.ground.size()) > set_limit)
        throw LimitError("ground set too large to enumerate");
    const std::size_t total = std::size_t{1} << sys.ground.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < sys.ground.size(); ++i)
            if (mask & (std::size_t{1} << i)) s.insert(sys.ground[i]);
        // Downward closedness makes subset pruning possible, but desk-scale
        // fixtures do not need it.
        if (sys.feasible(s)) visit(s);
    }
}

bool element_certificate_holds(const IndependenceSystem& sys, const VertexSet& solution,
                               const Rational& multiplier, std::size_t set_limit) {
    bool ok = true;
    enumerate_feasible_sets(
        sys,
        [&](const VertexSet& i) {
            if (!ok) return;
            if (multiplier * sys.weight_of(solution.set_minus(i)) <
                sys.weight_of(i.set_minus(solution)))
                ok = false;
        },
        set_limit);
    return ok;
}

std::optional<ExtendibilityCounterExample> check_p_extendible(const IndependenceSystem& sys,
                                                              int p, std::size_t pair_limit) {
    std::vector<VertexSet> feasible;
    enumerate_feasible_sets(sys, [&](const VertexSet& s) { feasible.push_back(s); });
    if (feasible.size() * feasible.size() > pair_limit)
        throw LimitError("too many feasible-set pairs to check");
    for (const auto& a : feasible) {
        for (const auto& b : feasible) {
            if (!a.set_minus(b).empty()) continue;  // need A subset of B
            for (int e : sys.ground) {
                if (b.contains(e)) continue;  // trivial: Z = {} works
                VertexSet ae = a;
                ae.insert(e);
                if (!sys.feasible(ae)) continue;
                // Smallest Z subset of B \ A with (B \ Z) + e feasible.
                VertexSet pool = b.set_minus(a);
                const auto& ids = pool.ids();
                int needed = -1;
                const std::size_t total = std::size_t{1} << ids.size();
                for (int size = 0; size <= static_cast<int>(ids.size()) && needed < 0; ++size) {
                    for (std::size_t mask = 0; mask < total; ++mask) {
                        if (__builtin_popcountll(mask) != size) continue;
                        VertexSet candidate = b;
                        for (std::size_t i = 0; i < ids.size(); ++i)
                            if (mask & (std::size_t{1} << i)) candidate.erase(ids[i]);
                        candidate.insert(e);
                        if (sys.feasible(candidate)) {
                            needed = size;
                            break;
                        }
                    }
                }
                if (needed < 0) needed = static_cast<int>(ids.size()) + 1;
                if (needed > p) return ExtendibilityCounterExample{a, b, e, needed};
            }
        }
    }
    return std::nullopt;
}

}  // namespace stabilis
