#include "corrpack/oracle.hpp"

#include <algorithm>
#include <limits>

#include "corrpack/error.hpp"
#include "corrpack/lowerbound.hpp"

namespace corrpack {

namespace {

struct NodeCounter {
    std::uint64_t used = 0;
    std::uint64_t cap = 0;
    void tick() {
        if (++used > cap) throw BudgetError("search exceeded its node budget");
    }
};

std::uint64_t pow_saturating(std::uint64_t base, int exp) {
    if (base == 0) return exp == 0 ? 1 : 0;
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

void require_cover_complete(const Graph& g, const Cover& cover) {
    for (auto [u, v] : g.edges())
        require(cover.has_matching(u, v), "cover is missing the matching of edge " +
                                              std::to_string(u) + "," +
                                              std::to_string(v));
}

/// Ordered s-tuples of distinct colors from [t], lexicographic.
std::vector<std::vector<int>> distinct_tuples(int t, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        for (int c = 1; c <= t; ++c) {
            if (std::find(cur.begin(), cur.end(), c) != cur.end()) continue;
            cur.push_back(c);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

bool find_packing_impl(const Graph& g, const Cover& cover, int s,
                       NodeCounter& nodes, Packing& packing) {
    const int t = cover.t();
    const auto tuples = distinct_tuples(t, s);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        for (const auto& tup : tuples) {
            nodes.tick();
            bool ok = true;
            for (int j = 0; j < s && ok; ++j)
                for (int u : g.adj[v]) {
                    if (u < v && cover.map_color(u, v, packing.color(j, u)) == tup[j]) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            for (int j = 0; j < s; ++j) packing.set_color(j, v, tup[j]);
            if (self(self, v + 1)) return true;
            for (int j = 0; j < s; ++j) packing.set_color(j, v, 0);
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

std::vector<std::vector<int>> enumerate_colorings(const Graph& g,
                                                  const Cover& cover,
                                                  Budget budget) {
    const int t = cover.t();
    require(t >= 1, "cover has no colors");
    require_cover_complete(g, cover);
    if (pow_saturating(static_cast<std::uint64_t>(t), g.n) > budget.max_nodes)
        throw BudgetError("t^n exceeds the enumeration budget");

    NodeCounter nodes{0, budget.max_nodes};
    std::vector<std::vector<int>> out;
    std::vector<int> phi(static_cast<std::size_t>(g.n), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n) {
            out.push_back(phi);
            return;
        }
        for (int c = 1; c <= t; ++c) {
            nodes.tick();
            bool ok = true;
            for (int u : g.adj[v])
                if (u < v && cover.map_color(u, v, phi[u]) == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            phi[v] = c;
            self(self, v + 1);
            phi[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::optional<Packing> find_packing_exhaustive(const Graph& g,
                                               const Cover& cover, int s,
                                               Budget budget) {
    const int t = cover.t();
    require(s >= 1 && s <= t, "coloring count must lie in [1, t]");
    require_cover_complete(g, cover);
    if (pow_saturating(static_cast<std::uint64_t>(t), g.n) > budget.max_nodes)
        throw BudgetError("the packing search space exceeds the budget");

    NodeCounter nodes{0, budget.max_nodes};
    Packing packing = Packing::make_empty(s, g.n);
    if (find_packing_impl(g, cover, s, nodes, packing)) return packing;
    return std::nullopt;
}

std::optional<Cover> search_bad_cover(const Graph& g, int t, int s,
                                      Budget budget) {
    require(t >= 1 && t <= 20, "cover enumeration supports 1 <= t <= 20");
    require(s >= 1 && s <= t, "coloring count must lie in [1, t]");
    const auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size());
    std::uint64_t t_fact = 1;
    for (int i = 2; i <= t; ++i) t_fact *= static_cast<std::uint64_t>(i);
    if (pow_saturating(t_fact, m) > budget.max_nodes)
        throw BudgetError("(t!)^m exceeds the cover enumeration budget");

    NodeCounter nodes{0, budget.max_nodes};
    std::vector<std::uint64_t> ranks(static_cast<std::size_t>(m), 0);
    while (true) {
        nodes.tick();
        Cover cover(t);
        for (int i = 0; i < m; ++i)
            cover.set_matching(edge_list[i].first, edge_list[i].second,
                               perm_unrank(ranks[i], t));
        Packing packing = Packing::make_empty(s, g.n);
        if (!find_packing_impl(g, cover, s, nodes, packing)) return cover;

        int i = m - 1;
        while (i >= 0 && ++ranks[i] == t_fact) ranks[i--] = 0;
        if (i < 0) return std::nullopt;
    }
}

std::vector<int> second_coloring_greedy(const Graph& g, const Cover& cover,
                                        const std::vector<int>& phi1) {
    require(cover.t() == 5, "the greedy second coloring concerns 5-covers");
    require_cover_complete(g, cover);
    auto [order, degeneracy] = degeneracy_order(g);
    require(degeneracy <= 3, "graph must be 3-degenerate");
    require(static_cast<int>(phi1.size()) == g.n,
            "first coloring must cover every vertex");
    for (int c : phi1) require(c >= 1 && c <= 5, "first coloring leaves [5]");
    for (auto [u, v] : g.edges())
        require(cover.map_color(u, v, phi1[u]) != phi1[v],
                "first coloring is not proper");

    std::vector<int> phi2(static_cast<std::size_t>(g.n), 0);
    for (int i = g.n - 1; i >= 0; --i) {
        const int v = order[i];
        ColorSet avail = ColorSet::full(5);
        avail.erase(phi1[v]);
        int colored = 0;
        for (int u : g.adj[v])
            if (phi2[u] != 0) {
                avail.erase(cover.map_color(u, v, phi2[u]));
                ++colored;
            }
        ensure(colored <= 3, "reverse degeneracy order admits three colored neighbors");
        ensure(!avail.empty(), "four constraints cannot empty five colors");
        phi2[v] = avail.least();
    }
    return phi2;
}

}  // namespace corrpack
