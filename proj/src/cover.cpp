#include "corrpack/cover.hpp"

#include <algorithm>
#include <sstream>

#include "corrpack/error.hpp"
#include "corrpack/rng.hpp"

namespace corrpack {

Perm Perm::identity(int t) {
    Perm p;
    p.fwd.resize(t);
    for (int i = 0; i < t; ++i) p.fwd[i] = i + 1;
    p.inv = p.fwd;
    return p;
}

Perm Perm::from_one_line(const std::vector<int>& vals) {
    const int t = static_cast<int>(vals.size());
    require(t >= 1 && t <= 64, "permutation size must be in 1..64");
    Perm p;
    p.fwd = vals;
    p.inv.assign(t, 0);
    for (int a = 1; a <= t; ++a) {
        int b = vals[a - 1];
        require(b >= 1 && b <= t, "permutation value out of range");
        require(p.inv[b - 1] == 0, "permutation repeats a value");
        p.inv[b - 1] = a;
    }
    return p;
}

ColorSet Perm::image(ColorSet s) const {
    ColorSet out;
    for (int c : s.to_vector()) out.insert(apply(c));
    return out;
}

ColorSet Perm::preimage(ColorSet s) const {
    ColorSet out;
    for (int c : s.to_vector()) out.insert(apply_inv(c));
    return out;
}

Cover::Cover(int t) : t_(t) {
    require(t >= 1 && t <= 64, "cover size t must be in 1..64");
}

std::uint64_t Cover::key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

bool Cover::has_matching(int u, int v) const {
    return perms_.count(key(u, v)) != 0;
}

void Cover::set_matching(int u, int v, const Perm& sigma) {
    require(u != v, "cover edges cannot be loops");
    require(sigma.size() == t_, "matching size disagrees with cover t");
    Perm oriented = sigma;
    if (u > v) std::swap(oriented.fwd, oriented.inv);
    auto [it, inserted] = perms_.try_emplace(key(u, v), oriented);
    if (!inserted)
        require(it->second == oriented,
                "conflicting matchings supplied for edge (" +
                    std::to_string(std::min(u, v)) + "," +
                    std::to_string(std::max(u, v)) + ")");
}

const Perm& Cover::matching(int u, int v) const {
    auto it = perms_.find(key(u, v));
    require(it != perms_.end(),
            "cover has no matching for edge (" + std::to_string(std::min(u, v)) +
                "," + std::to_string(std::max(u, v)) + ")");
    return it->second;
}

int Cover::map_color(int from, int to, int c) const {
    const Perm& p = matching(from, to);
    return from < to ? p.apply(c) : p.apply_inv(c);
}

ColorSet Cover::map_set(int from, int to, ColorSet s) const {
    const Perm& p = matching(from, to);
    return from < to ? p.image(s) : p.preimage(s);
}

std::vector<std::pair<int, int>> Cover::keys_sorted() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(perms_.size());
    for (const auto& [k, _] : perms_)
        keys.emplace_back(static_cast<int>(k >> 32),
                          static_cast<int>(k & 0xffffffffULL));
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<int> complete_partial_perm(
    int t, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> fwd(t, 0);
    std::vector<char> target_used(t + 1, 0);
    for (auto [a, b] : pairs) {
        require(a >= 1 && a <= t && b >= 1 && b <= t,
                "partial matching color out of range");
        require(fwd[a - 1] == 0 || fwd[a - 1] == b,
                "partial matching maps a color twice");
        require(!target_used[b] || fwd[a - 1] == b,
                "partial matching reuses a target color");
        fwd[a - 1] = b;
        target_used[b] = 1;
    }
    int next = 1;
    for (int a = 1; a <= t; ++a) {
        if (fwd[a - 1] != 0) continue;
        while (target_used[next]) ++next;
        fwd[a - 1] = next;
        target_used[next] = 1;
    }
    return fwd;
}

Cover complete_cover(const PartialCover& pc) {
    Cover cover(pc.t);
    for (const auto& [edge, pairs] : pc.pairs) {
        auto [u, v] = edge;
        require(u < v, "partial cover keys must satisfy u < v");
        cover.set_matching(u, v,
                           Perm::from_one_line(complete_partial_perm(pc.t, pairs)));
    }
    return cover;
}

Cover random_cover(const Graph& g, int t, std::uint64_t seed) {
    Cover cover(t);
    Rng rng(seed);
    for (auto [u, v] : g.edges())
        cover.set_matching(u, v, Perm::from_one_line(rng.permutation(t)));
    return cover;
}

Packing Packing::make_empty(int s, int n) {
    Packing p;
    p.s = s;
    p.colorings.assign(s, std::vector<int>(n, 0));
    return p;
}

bool Packing::total() const {
    for (const auto& phi : colorings)
        for (int c : phi)
            if (c == 0) return false;
    return true;
}

ListSystem ListSystem::make(int s, int n, ColorSet init) {
    ListSystem ls;
    ls.s = s;
    ls.n = n;
    ls.data.assign(static_cast<std::size_t>(s) * n, init);
    return ls;
}

std::vector<ColorSet> residual_lists(const Graph& g, const Cover& cover,
                                     const Packing& packing, int v) {
    require(v >= 0 && v < g.n, "vertex out of range");
    for (int j = 0; j < packing.s; ++j)
        require(!packing.colored(j, v), "residual lists of an already colored vertex");
    std::vector<ColorSet> lists(packing.s, ColorSet::full(cover.t()));
    for (int u : g.adj[v]) {
        for (int j = 0; j < packing.s; ++j) {
            if (packing.colored(j, u))
                lists[j].erase(cover.map_color(u, v, packing.color(j, u)));
        }
    }
    return lists;
}

std::string Violation::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::WrongCount:
            os << "packing has " << j << " colorings, expected " << k;
            break;
        case Kind::Uncolored:
            os << "coloring " << j + 1 << " leaves vertex " << v << " uncolored";
            break;
        case Kind::Properness:
            os << "coloring " << j + 1 << " uses matched colors on edge (" << u
               << "," << v << ")";
            break;
        case Kind::Disjointness:
            os << "colorings " << j + 1 << " and " << k + 1
               << " agree at vertex " << v;
            break;
    }
    return os.str();
}

std::string CheckReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& viol : violations) os << viol.to_string() << '\n';
    return os.str();
}

CheckReport check_packing(const Graph& g, const Cover& cover,
                          const Packing& packing, int required_s) {
    CheckReport report;
    if (required_s > 0 && packing.s != required_s) {
        report.violations.push_back(
            {Violation::Kind::WrongCount, -1, -1, packing.s, required_s});
        return report;
    }
    for (int j = 0; j < packing.s; ++j) {
        require(static_cast<int>(packing.colorings[j].size()) == g.n,
                "packing vertex count disagrees with graph");
        if (required_s > 0) {
            for (int v = 0; v < g.n; ++v)
                if (!packing.colored(j, v))
                    report.violations.push_back(
                        {Violation::Kind::Uncolored, -1, v, j, -1});
        }
    }
    for (auto [u, v] : g.edges()) {
        for (int j = 0; j < packing.s; ++j) {
            if (!packing.colored(j, u) || !packing.colored(j, v)) continue;
            if (cover.map_color(u, v, packing.color(j, u)) == packing.color(j, v))
                report.violations.push_back(
                    {Violation::Kind::Properness, u, v, j, -1});
        }
    }
    for (int v = 0; v < g.n; ++v) {
        for (int j = 0; j < packing.s; ++j) {
            for (int k = j + 1; k < packing.s; ++k) {
                if (packing.colored(j, v) && packing.colored(k, v) &&
                    packing.color(j, v) == packing.color(k, v))
                    report.violations.push_back(
                        {Violation::Kind::Disjointness, -1, v, j, k});
            }
        }
    }
    return report;
}

}  // namespace corrpack
