#include "stabilis/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace stabilis {

// ---- VertexSet ----

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& o) const {
    std::vector<int> out;
    std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::set_minus(const VertexSet& o) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::set_intersect(const VertexSet& o) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::symmetric_difference(const VertexSet& o) const {
    std::vector<int> out;
    std::set_symmetric_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                                  std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

// ---- WeightedGraph ----

WeightedGraph WeightedGraph::build(std::vector<int> ids, std::vector<std::pair<int, int>> edges,
                                   std::map<int, Rational> weights,
                                   std::optional<std::map<int, int>> layers) {
    WeightedGraph g;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw Error("duplicate vertex id");
    g.ids_ = std::move(ids);
    g.weights_.assign(g.ids_.size(), Rational(1));
    for (const auto& [v, w] : weights) {
        if (!g.has_vertex(v)) throw Error("weight for unknown vertex " + std::to_string(v));
        if (w.sgn() <= 0) throw Error("weight must be positive for vertex " + std::to_string(v));
        g.weights_[g.index_of(v)] = w;
    }
    g.adj_.assign(g.ids_.size(), {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw Error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw Error("duplicate edge");
        g.adj_[g.index_of(u)].push_back(v);
        g.adj_[g.index_of(v)].push_back(u);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    if (layers) {
        std::vector<int> ls(g.ids_.size(), 0);
        for (const auto& [v, l] : *layers) {
            if (!g.has_vertex(v)) throw Error("layer for unknown vertex " + std::to_string(v));
            if (l < 0) throw Error("negative layer");
            ls[g.index_of(v)] = l;
        }
        for (auto [u, v] : g.edges_) {
            if (std::abs(ls[g.index_of(u)] - ls[g.index_of(v)]) > 1)
                throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") spans non-adjacent layers");
        }
        g.layers_ = std::move(ls);
    }
    return g;
}

WeightedGraph WeightedGraph::simple(int n, std::vector<std::pair<int, int>> edges,
                                    std::map<int, Rational> weights) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
    return build(std::move(ids), std::move(edges), std::move(weights));
}

int WeightedGraph::index_of(int v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        throw Error("vertex id out of range: " + std::to_string(v));
    return static_cast<int>(it - ids_.begin());
}

bool WeightedGraph::has_vertex(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

const Rational& WeightedGraph::weight(int v) const { return weights_[index_of(v)]; }

const std::vector<int>& WeightedGraph::neighbors(int v) const { return adj_[index_of(v)]; }

bool WeightedGraph::has_edge(int u, int v) const {
    const auto& a = adj_[index_of(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

int WeightedGraph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int WeightedGraph::layer(int v) const {
    if (!layers_) throw Error("graph has no layers");
    return (*layers_)[index_of(v)];
}

int WeightedGraph::max_layer() const {
    if (!layers_) throw Error("graph has no layers");
    int m = 0;
    for (int l : *layers_) m = std::max(m, l);
    return m;
}

Rational WeightedGraph::weight_of(const VertexSet& s) const {
    Rational sum;
    for (int v : s) sum += weight(v);
    return sum;
}

Rational WeightedGraph::total_weight() const {
    Rational sum;
    for (const auto& w : weights_) sum += w;
    return sum;
}

bool WeightedGraph::integer_weights() const {
    for (const auto& w : weights_)
        if (!w.is_integer()) return false;
    return true;
}

VertexSet WeightedGraph::closed_neighborhood(int v) const {
    VertexSet s(neighbors(v));
    s.insert(v);
    return s;
}

VertexSet WeightedGraph::neighborhood_of(const VertexSet& s) const {
    VertexSet out;
    for (int v : s)
        for (int u : neighbors(v))
            if (!s.contains(u)) out.insert(u);
    return out;
}

WeightedGraph WeightedGraph::induced(const VertexSet& keep) const {
    WeightedGraph g;
    for (int v : keep) (void)index_of(v);  // validate
    g.ids_ = keep.ids();
    g.weights_.reserve(g.ids_.size());
    g.adj_.resize(g.ids_.size());
    if (layers_) g.layers_.emplace(g.ids_.size(), 0);
    for (std::size_t i = 0; i < g.ids_.size(); ++i) {
        int v = g.ids_[i];
        g.weights_.push_back(weight(v));
        for (int u : neighbors(v))
            if (keep.contains(u)) g.adj_[i].push_back(u);
        if (layers_) (*g.layers_)[i] = layer(v);
    }
    for (auto [u, v] : edges_)
        if (keep.contains(u) && keep.contains(v)) g.edges_.emplace_back(u, v);
    return g;
}

WeightedGraph WeightedGraph::with_weights(std::map<int, Rational> weights) const {
    WeightedGraph g = *this;
    for (const auto& [v, w] : weights) {
        if (w.sgn() <= 0) throw Error("weight must be positive");
        g.weights_[index_of(v)] = w;
    }
    return g;
}

std::vector<VertexSet> WeightedGraph::connected_components() const {
    std::vector<bool> seen(ids_.size(), false);
    std::vector<VertexSet> comps;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> stack{ids_[i]}, comp;
        seen[i] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : neighbors(v)) {
                int j = index_of(u);
                if (!seen[j]) {
                    seen[j] = true;
                    stack.push_back(u);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    return comps;
}

bool WeightedGraph::is_connected() const {
    return size() <= 1 || connected_components().size() == 1;
}

// ---- Perturbation ----

Rational Perturbation::factor(int v) const {
    auto it = multiplier.find(v);
    return it == multiplier.end() ? Rational(1) : it->second;
}

void Perturbation::validate(const WeightedGraph& g) const {
    if (gamma < Rational(1)) throw PerturbationError("gamma must be >= 1");
    for (const auto& [v, m] : multiplier) {
        if (!g.has_vertex(v)) throw PerturbationError("multiplier for unknown vertex");
        if (m < Rational(1) || m > gamma)
            throw PerturbationError("multiplier for vertex " + std::to_string(v) +
                                    " outside [1, gamma]");
    }
}

bool is_independent(const WeightedGraph& g, const VertexSet& s) {
    for (int v : s) {
        (void)g.weight(v);  // id range check
        for (int u : g.neighbors(v))
            if (u > v && s.contains(u)) return false;
    }
    return true;
}

WeightedGraph apply_perturbation(const WeightedGraph& g, const Perturbation& p) {
    p.validate(g);
    std::map<int, Rational> w;
    for (int v : g.vertices()) w[v] = g.weight(v) * p.factor(v);
    return g.with_weights(std::move(w));
}

// ---- parsing ----

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& s, int lineno, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + " '" + s + "' at line " + std::to_string(lineno));
    }
}

struct ParsedProblem {
    std::string kind;
    WeightedGraph graph;
    std::vector<int> terminals;
};

ParsedProblem parse_problem(std::istream& in, const std::string& expected_kind) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string kind;
    int n = 0, m = 0;
    std::map<int, Rational> weights;
    std::map<int, int> layers;
    bool any_layer = false;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen_edges;
    std::set<int> seen_weights;
    std::vector<int> terminals;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        const std::string& tag = toks[0];
        auto at = [&] { return " at line " + std::to_string(lineno); };
        if (tag == "p") {
            if (have_header) throw ParseError("duplicate header" + at());
            if (toks.size() != 4) throw ParseError("malformed header" + at());
            kind = toks[1];
            if (!expected_kind.empty() && kind != expected_kind)
                throw ParseError("expected 'p " + expected_kind + "' header, got 'p " + kind +
                                 "'" + at());
            if (kind != "mis" && kind != "nmc") throw ParseError("unknown problem kind" + at());
            n = parse_int(toks[2], lineno, "vertex count");
            m = parse_int(toks[3], lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError("negative counts" + at());
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("line before 'p' header" + at());
        auto check_id = [&](int v) {
            if (v < 1 || v > n) throw ParseError("vertex id out of range" + at());
            return v;
        };
        if (tag == "v") {
            if (toks.size() != 3) throw ParseError("malformed line" + at());
            int v = check_id(parse_int(toks[1], lineno, "vertex id"));
            Rational w;
            try {
                w = parse_rational(toks[2]);
            } catch (const std::exception&) {
                throw ParseError("bad weight" + at());
            }
            if (w.sgn() <= 0) throw ParseError("weight ≤ 0" + at());
            if (!seen_weights.insert(v).second) throw ParseError("duplicate weight line" + at());
            weights[v] = w;
        } else if (tag == "e") {
            if (toks.size() != 3) throw ParseError("malformed line" + at());
            int u = check_id(parse_int(toks[1], lineno, "vertex id"));
            int v = check_id(parse_int(toks[2], lineno, "vertex id"));
            if (u == v) throw ParseError("self-loop" + at());
            auto key = std::minmax(u, v);
            if (!seen_edges.insert({key.first, key.second}).second)
                throw ParseError("duplicate edge" + at());
            edges.emplace_back(u, v);
        } else if (tag == "l") {
            if (toks.size() != 3) throw ParseError("malformed line" + at());
            int v = check_id(parse_int(toks[1], lineno, "vertex id"));
            int l = parse_int(toks[2], lineno, "layer");
            if (l < 0) throw ParseError("negative layer" + at());
            layers[v] = l;
            any_layer = true;
        } else if (tag == "t" && kind == "nmc") {
            if (toks.size() != 2) throw ParseError("malformed line" + at());
            terminals.push_back(check_id(parse_int(toks[1], lineno, "terminal id")));
        } else {
            throw ParseError("malformed line" + at());
        }
    }
    if (!have_header) throw ParseError("missing 'p' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but file has " +
                         std::to_string(edges.size()));
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
    WeightedGraph g;
    try {
        g = WeightedGraph::build(std::move(ids), std::move(edges), std::move(weights),
                                 any_layer ? std::optional(layers) : std::nullopt);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return {kind, std::move(g), std::move(terminals)};
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) { return parse_problem(in, "mis").graph; }

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

namespace detail {
// Shared with the nmc parser in multiway_cut.cpp.
std::pair<WeightedGraph, std::vector<int>> parse_nmc_file(std::istream& in) {
    auto p = parse_problem(in, "nmc");
    return {std::move(p.graph), std::move(p.terminals)};
}
}  // namespace detail

std::string render_graph(const WeightedGraph& g) {
    std::ostringstream os;
    int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
        if (g.vertices()[i] != i + 1) throw Error("render requires contiguous 1..n vertex ids");
    os << "p mis " << n << ' ' << g.edges().size() << '\n';
    for (int v : g.vertices()) os << "v " << v << ' ' << g.weight(v) << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
    if (g.has_layers())
        for (int v : g.vertices()) os << "l " << v << ' ' << g.layer(v) << '\n';
    return os.str();
}

Certificate parse_certificate(std::istream& in) {
    Certificate c;
    bool have_gamma = false, have_solution = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        auto at = [&] { return " at line " + std::to_string(lineno); };
        if (toks[0] == "gamma") {
            if (have_gamma || toks.size() != 2) throw ParseError("bad gamma line" + at());
            c.perturbation.gamma = parse_rational(toks[1]);
            have_gamma = true;
        } else if (toks[0] == "solution") {
            if (have_solution) throw ParseError("duplicate solution line" + at());
            std::vector<int> ids;
            for (std::size_t i = 1; i < toks.size(); ++i)
                ids.push_back(parse_int(toks[i], lineno, "vertex id"));
            c.solution = VertexSet(std::move(ids));
            have_solution = true;
        } else if (toks[0] == "perturb") {
            if (toks.size() != 3) throw ParseError("bad perturb line" + at());
            int v = parse_int(toks[1], lineno, "vertex id");
            c.perturbation.multiplier[v] = parse_rational(toks[2]);
        } else {
            throw ParseError("malformed line" + at());
        }
    }
    if (!have_gamma) throw ParseError("missing gamma line");
    if (!have_solution) throw ParseError("missing solution line");
    return c;
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream is(text);
    return parse_certificate(is);
}

std::string render_certificate(const Certificate& c) {
    std::ostringstream os;
    os << "gamma " << c.perturbation.gamma << '\n';
    os << "solution";
    for (int v : c.solution) os << ' ' << v;
    os << '\n';
    for (const auto& [v, m] : c.perturbation.multiplier)
        if (m != Rational(1)) os << "perturb " << v << ' ' << m << '\n';
    return os.str();
}

}  // namespace stabilis
