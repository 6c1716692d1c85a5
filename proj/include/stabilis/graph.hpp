#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabilis/rational.hpp"

namespace stabilis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
// Enumeration / budget guard tripped.
struct LimitError : Error {
    using Error::Error;
};
// Perturbation multiplier outside [1, gamma]; reported distinctly from an
// optimality failure, which is a plain `false` from verification.
struct PerturbationError : Error {
    using Error::Error;
};

// Sorted duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    const std::vector<int>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    VertexSet set_union(const VertexSet& o) const;
    VertexSet set_minus(const VertexSet& o) const;
    VertexSet set_intersect(const VertexSet& o) const;
    VertexSet symmetric_difference(const VertexSet& o) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic order on the sorted id sequences; used for
    // deterministic tie-breaking everywhere.
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.ids_ < b.ids_; }

private:
    std::vector<int> ids_;
};

// Undirected vertex-weighted graph with exact rational weights > 0.
// Vertex ids are 1-based in files; induced subgraphs keep original ids.
// Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    static WeightedGraph build(std::vector<int> ids,
                               std::vector<std::pair<int, int>> edges,
                               std::map<int, Rational> weights,
                               std::optional<std::map<int, int>> layers = std::nullopt);

    // n vertices with ids 1..n, unit weights unless given.
    static WeightedGraph simple(int n, std::vector<std::pair<int, int>> edges,
                                std::map<int, Rational> weights = {});

    std::size_t size() const { return ids_.size(); }
    const std::vector<int>& vertices() const { return ids_; }
    bool has_vertex(int v) const;
    const Rational& weight(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    bool has_layers() const { return layers_.has_value(); }
    int layer(int v) const;
    int max_layer() const;

    Rational weight_of(const VertexSet& s) const;
    Rational total_weight() const;
    bool integer_weights() const;

    VertexSet vertex_set() const { return VertexSet(ids_); }
    VertexSet closed_neighborhood(int v) const;
    VertexSet neighborhood_of(const VertexSet& s) const;  // N(S), excludes S

    // Induced subgraph on `keep`; vertex ids are preserved.
    WeightedGraph induced(const VertexSet& keep) const;
    // Graph with identical structure and new weights.
    WeightedGraph with_weights(std::map<int, Rational> weights) const;

    std::vector<VertexSet> connected_components() const;
    bool is_connected() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    int index_of(int v) const;

    std::vector<int> ids_;                       // sorted
    std::vector<Rational> weights_;              // by index
    std::vector<std::vector<int>> adj_;          // by index, sorted neighbor ids
    std::vector<std::pair<int, int>> edges_;     // canonical (u<v), sorted
    std::optional<std::vector<int>> layers_;     // by index
};

// Multiplicative weight perturbation: 1 <= multiplier(u) <= gamma.
struct Perturbation {
    Rational gamma{1};
    std::map<int, Rational> multiplier;  // absent => 1

    Rational factor(int v) const;
    void validate(const WeightedGraph& g) const;  // throws PerturbationError
};

struct Certificate {
    VertexSet solution;
    Perturbation perturbation;
};

// --- graph_core operations ---

bool is_independent(const WeightedGraph& g, const VertexSet& s);

WeightedGraph apply_perturbation(const WeightedGraph& g, const Perturbation& p);

// File format: `p mis <n> <m>`, `v <id> <weight>`, `e <u> <v>`,
// optional `l <id> <layer>`; '#' or a lone 'c' token starts a comment.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);
std::string render_graph(const WeightedGraph& g);

// Certificate format: `gamma <r>`, `solution <id>...`, `perturb <id> <r>`*.
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate(const std::string& text);
std::string render_certificate(const Certificate& c);

namespace detail {
// `p nmc` files share the graph grammar plus `t <id>` terminal lines;
// consumed by the multiway_cut module.
std::pair<WeightedGraph, std::vector<int>> parse_nmc_file(std::istream& in);
}  // namespace detail

}  // namespace stabilis
