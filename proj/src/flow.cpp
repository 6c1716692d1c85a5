#include "stabilis/flow.hpp"

#include <queue>
#include <stdexcept>

namespace stabilis {

FlowNetwork::FlowNetwork(int nodes) : n_(nodes), adj_(nodes) {}

void FlowNetwork::add_arc(int u, int v, Rational capacity) {
    if (capacity.sgn() < 0) throw std::invalid_argument("negative capacity");
    Arc fwd{v, std::move(capacity), static_cast<int>(adj_[v].size()), false};
    Arc rev{u, Rational(0), static_cast<int>(adj_[u].size()), false};
    adj_[u].push_back(std::move(fwd));
    adj_[v].push_back(std::move(rev));
}

void FlowNetwork::add_arc_unbounded(int u, int v) {
    Arc fwd{v, Rational(0), static_cast<int>(adj_[v].size()), true};
    Arc rev{u, Rational(0), static_cast<int>(adj_[u].size()), false};
    adj_[u].push_back(std::move(fwd));
    adj_[v].push_back(std::move(rev));
}

bool FlowNetwork::bfs_augment(int s, int t, Rational& pushed) {
    std::vector<int> prev_node(n_, -1), prev_arc(n_, -1);
    prev_node[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev_node[t] < 0) {
        int u = q.front();
        q.pop();
        for (std::size_t i = 0; i < adj_[u].size(); ++i) {
            const Arc& a = adj_[u][i];
            bool has_residual = a.unbounded || a.cap.sgn() > 0;
            if (!has_residual || prev_node[a.to] >= 0) continue;
            prev_node[a.to] = u;
            prev_arc[a.to] = static_cast<int>(i);
            q.push(a.to);
        }
    }
    if (prev_node[t] < 0) return false;
    // Bottleneck along the path; unbounded arcs never constrain it.
    Rational bottleneck;
    bool have = false;
    for (int v = t; v != s; v = prev_node[v]) {
        const Arc& a = adj_[prev_node[v]][prev_arc[v]];
        if (a.unbounded) continue;
        if (!have || a.cap < bottleneck) {
            bottleneck = a.cap;
            have = true;
        }
    }
    if (!have) throw std::runtime_error("unbounded augmenting path");
    for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = adj_[prev_node[v]][prev_arc[v]];
        if (!a.unbounded) a.cap -= bottleneck;
        adj_[a.to][a.rev].cap += bottleneck;
    }
    pushed += bottleneck;
    return true;
}

Rational FlowNetwork::max_flow(int s, int t) {
    last_s_ = s;
    Rational total;
    while (bfs_augment(s, t, total)) {
    }
    return total;
}

std::vector<bool> FlowNetwork::source_side() const {
    std::vector<bool> seen(n_, false);
    if (last_s_ < 0) return seen;
    std::queue<int> q;
    q.push(last_s_);
    seen[last_s_] = true;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const Arc& a : adj_[u]) {
            bool has_residual = a.unbounded || a.cap.sgn() > 0;
            if (has_residual && !seen[a.to]) {
                seen[a.to] = true;
                q.push(a.to);
            }
        }
    }
    return seen;
}

}  // namespace stabilis
