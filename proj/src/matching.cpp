#include "stabilis/matching.hpp"

#include <functional>
#include <limits>
#include <queue>

namespace stabilis {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

MatchingResult hopcroft_karp(int n_left, int n_right, const std::vector<std::vector<int>>& adj) {
    MatchingResult res;
    res.match_left.assign(n_left, -1);
    res.match_right.assign(n_right, -1);
    std::vector<int> dist(n_left, 0);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int u = 0; u < n_left; ++u) {
            if (res.match_left[u] < 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = res.match_right[v];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = res.match_right[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                res.match_left[u] = v;
                res.match_right[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    while (bfs()) {
        for (int u = 0; u < n_left; ++u)
            if (res.match_left[u] < 0 && dfs(u)) ++res.size;
    }
    return res;
}

}  // namespace stabilis
