#pragma once

#include <vector>

#include "stabilis/rational.hpp"

namespace stabilis {

// Edmonds-Karp maximum flow with exact rational capacities. Node ids are
// 0-based indices local to the network. Deterministic: BFS explores arcs
// in insertion order.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes);

    // Adds arc u->v with the given capacity (and a zero-capacity reverse arc).
    void add_arc(int u, int v, Rational capacity);
    // "Infinite" capacity arc: capacity larger than any cut that avoids it.
    void add_arc_unbounded(int u, int v);

    Rational max_flow(int s, int t);

    // After max_flow: nodes reachable from s in the residual network
    // (the canonical minimum cut's source side).
    std::vector<bool> source_side() const;

private:
    struct Arc {
        int to;
        Rational cap;
        int rev;
        bool unbounded;
    };
    bool bfs_augment(int s, int t, Rational& pushed);

    int n_;
    std::vector<std::vector<Arc>> adj_;
    int last_s_ = -1;
};

}  // namespace stabilis
