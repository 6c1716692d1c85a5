#pragma once

#include <functional>
#include <optional>
#include <string>

#include "stabilis/graph.hpp"

namespace stabilis {

// Downward-closed set system over integer element ids with additive
// rational weights. `extendibility` is the declared p; nullopt marks a
// p-system that is not p-extendible for any p (the knapsack fixture).
struct IndependenceSystem {
    std::string name;
    std::vector<int> ground;  // sorted element ids
    std::function<bool(const VertexSet&)> feasible;
    std::optional<int> extendibility;
    std::map<int, Rational> weight;

    const Rational& weight_of_element(int e) const;
    Rational weight_of(const VertexSet& s) const;
};

struct KnapsackItem {
    int id;
    Rational value;
    Rational size;
};

// Elements are the vertices; feasible sets are independent sets; p = max(1, Delta).
IndependenceSystem make_graph_system(const WeightedGraph& g);

// Elements are edge indices 1..|E| in edge order; feasible sets are
// matchings; p = 2. Edge weights default to 1.
IndependenceSystem make_matching_system(const WeightedGraph& g,
                                        std::vector<Rational> edge_weights = {});

// Feasible sets fit in the capacity; a p-system that is not p-extendible.
IndependenceSystem make_knapsack_system(const std::vector<KnapsackItem>& items,
                                        const Rational& capacity);

// `p knap` file: `i <id> <value> <size>` lines and one `capacity <r>` line.
std::pair<std::vector<KnapsackItem>, Rational> parse_knapsack(std::istream& in);

// The tightness fixture: 3-edge path with edge weights (1, 11/10, 1).
IndependenceSystem matching_tight_system();
// capacity 1; item 1: value 2, size 1; items 2..6: value 1, size 1/5.
IndependenceSystem knapsack_fixture_system();

// Element-space analog of a Certificate: uniform multiplier on the solution.
struct ElementCertificate {
    VertexSet solution;
    Rational multiplier;
};

// Greedy over elements by weight (smallest id on ties), keeping feasibility;
// certificate multiplier is the declared p.
ElementCertificate greedy_p_extendible(const IndependenceSystem& sys);

// Enumeration check of M * w(S \ I) >= w(I \ S) over every feasible I.
bool element_certificate_holds(const IndependenceSystem& sys, const VertexSet& solution,
                               const Rational& multiplier, std::size_t set_limit = 1u << 20);

void enumerate_feasible_sets(const IndependenceSystem& sys,
                             const std::function<void(const VertexSet&)>& visit,
                             std::size_t set_limit = 1u << 20);

struct ExtendibilityCounterExample {
    VertexSet a, b;
    int element;
    int needed;  // smallest |Z| that works
};

// Exhaustive verification of the p-extendibility property; returns the
// first violation witness in enumeration order, or nullopt when verified.
std::optional<ExtendibilityCounterExample> check_p_extendible(const IndependenceSystem& sys,
                                                              int p,
                                                              std::size_t pair_limit = 1u << 22);

}  // namespace stabilis
