#include "corrpack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "corrpack/error.hpp"

namespace corrpack {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& a : adj) total += static_cast<int>(a.size());
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    require(n >= 0, "vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
        require(u != v, "loops are not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            g.had_duplicate_edges = true;
            continue;
        }
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

Graph wagner_m8() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
    return build_graph(8, e);
}

Graph complete_bipartite_k3t(int t) {
    require(t >= 1, "K_{3,t} needs t >= 1");
    Graph g;
    g.n = t + 3;
    g.adj.assign(g.n, {});
    for (int w = 0; w < 3; ++w) {
        g.adj[w].reserve(t);
        for (int u = 3; u < t + 3; ++u) g.adj[w].push_back(u);
    }
    for (int u = 3; u < t + 3; ++u) g.adj[u] = {0, 1, 2};
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> todo = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!todo.empty()) {
        int v = todo.back();
        todo.pop_back();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                todo.push_back(w);
            }
    }
    return cnt == g.n;
}

std::pair<std::vector<int>, int> degeneracy_order(const Graph& g) {
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);

    std::vector<int> order;
    order.reserve(g.n);
    int degeneracy = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        degeneracy = std::max(degeneracy, deg[best]);
        removed[best] = 1;
        order.push_back(best);
        for (int u : g.adj[best])
            if (!removed[u]) --deg[u];
    }
    return {order, degeneracy};
}

}  // namespace corrpack
