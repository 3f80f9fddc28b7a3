#include "corrpack/compose.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

#include "corrpack/error.hpp"
#include "corrpack/matching.hpp"
#include "corrpack/planar.hpp"

namespace corrpack {

Piece make_planar_piece(PlaneEmbedding emb) {
    Piece p;
    p.kind = Piece::Kind::Planar;
    p.emb = std::move(emb);
    return p;
}

Piece make_m8_piece() {
    Piece p;
    p.kind = Piece::Kind::M8;
    p.emb.g = wagner_m8();
    return p;
}

namespace {

std::string piece_tag(int index) { return "piece " + std::to_string(index) + ": "; }

void validate_piece(const Piece& p, int index) {
    const Graph& g = p.emb.g;
    require(g.n >= 1, piece_tag(index) + "empty piece");
    require(is_connected(g), piece_tag(index) + "piece graph must be connected");
    if (p.kind == Piece::Kind::M8) {
        const Graph m8 = wagner_m8();
        require(g.n == 8 && g.edges() == m8.edges(),
                piece_tag(index) + "graph is not the Wagner graph");
    } else {
        require(static_cast<int>(p.emb.rotations.size()) == g.n,
                piece_tag(index) + "planar piece needs a rotation per vertex");
    }
}

void require_clique(const Graph& g, const std::vector<int>& verts,
                    const std::string& msg) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t k = i + 1; k < verts.size(); ++k)
            require(g.has_edge(verts[i], verts[k]), msg);
}

}  // namespace

ComposedGraph build_composed_graph(const CliqueSumTree& tree) {
    const int pc = static_cast<int>(tree.pieces.size());
    require(pc >= 1, "tree has no pieces");
    require(static_cast<int>(tree.joins.size()) == pc - 1,
            "a tree over " + std::to_string(pc) + " pieces needs exactly " +
                std::to_string(pc - 1) + " joins");
    for (int i = 0; i < pc; ++i) validate_piece(tree.pieces[i], i);

    const int base = tree.joins.empty() ? 0 : tree.joins[0].left;
    require(base >= 0 && base < pc, "base piece index out of range");
    std::vector<char> used(pc, 0);
    used[base] = 1;

    ComposedGraph out;
    out.piece_to_global.assign(pc, {});
    const Graph& bg = tree.pieces[base].emb.g;
    std::vector<std::pair<int, int>> edges = bg.edges();
    int n = bg.n;
    out.piece_to_global[base].resize(n);
    for (int v = 0; v < n; ++v) out.piece_to_global[base][v] = v;

    std::set<std::pair<int, int>> glue;
    for (std::size_t q = 0; q < tree.joins.size(); ++q) {
        const Join& jn = tree.joins[q];
        const std::string tag = "join " + std::to_string(q) + ": ";
        if (q > 0)
            require(jn.left == Join::kAcc,
                    tag + "only the first join may name a base piece");
        require(jn.right >= 0 && jn.right < pc, tag + "right piece out of range");
        require(!used[jn.right], tag + "piece used twice");
        used[jn.right] = 1;
        require(jn.r >= 1 && jn.r <= 3, tag + "clique size must be 1, 2 or 3");
        require(static_cast<int>(jn.identify.size()) == jn.r,
                tag + "need exactly r identified pairs");

        const Graph& rg = tree.pieces[jn.right].emb.g;
        std::vector<int> acc_side, local_side;
        for (auto [g_id, l_id] : jn.identify) {
            require(g_id >= 0 && g_id < n, tag + "accumulated vertex out of range");
            require(l_id >= 0 && l_id < rg.n, tag + "piece vertex out of range");
            acc_side.push_back(g_id);
            local_side.push_back(l_id);
        }
        auto distinct = [](std::vector<int> v) {
            std::sort(v.begin(), v.end());
            return std::adjacent_find(v.begin(), v.end()) == v.end();
        };
        require(distinct(acc_side) && distinct(local_side),
                tag + "identified vertices repeat");
        require_clique(rg, local_side, tag + "glue is not a clique in the piece");

        // The accumulated side is checked against the edges gathered so far.
        Graph acc = build_graph(n, edges);
        require_clique(acc, acc_side, tag + "glue is not a clique in the accumulation");

        auto& map = out.piece_to_global[jn.right];
        map.assign(rg.n, -1);
        for (int i = 0; i < jn.r; ++i) map[local_side[i]] = acc_side[i];
        for (int v = 0; v < rg.n; ++v)
            if (map[v] < 0) map[v] = n++;
        for (auto [a, b] : rg.edges()) {
            int ga = map[a], gb = map[b];
            edges.emplace_back(std::min(ga, gb), std::max(ga, gb));
        }
        for (std::size_t i = 0; i < acc_side.size(); ++i)
            for (std::size_t k = i + 1; k < acc_side.size(); ++k)
                glue.insert(std::minmax(acc_side[i], acc_side[k]));
    }

    out.g = build_graph(n, edges);
    out.glue_edges.assign(glue.begin(), glue.end());
    return out;
}

Packing pack_m8(const Graph& g, const Cover& cover, int s, Packing precolor) {
    const Graph m8 = wagner_m8();
    require(g.n == 8 && g.edges() == m8.edges(), "graph is not the Wagner graph");
    require(cover.t() >= 6, "Wagner packing needs t >= 6 (degree 3 <= t/2)");
    require(s >= 1 && s <= cover.t(), "coloring count must be in [1, t]");
    for (auto [u, v] : g.edges())
        require(cover.has_matching(u, v), "cover is missing a matching");

    Packing packing = precolor.s == 0 ? Packing::make_empty(s, 8)
                                      : std::move(precolor);
    require(packing.s == s && packing.n() == 8, "precolor has the wrong shape");
    std::vector<int> seeds;
    for (int v = 0; v < 8; ++v) {
        bool any = false, all = true;
        for (int j = 0; j < s; ++j) {
            any = any || packing.colored(j, v);
            all = all && packing.colored(j, v);
        }
        require(any == all, "precolored vertices must be colored in every coloring");
        if (any) seeds.push_back(v);
    }
    require(seeds.size() <= 2, "precolor must sit inside one edge");
    if (seeds.size() == 2)
        require(g.has_edge(seeds[0], seeds[1]), "precolored pair must be adjacent");
    require(check_packing(g, cover, packing, 0).ok(), "invalid precolor");

    for (int v = 0; v < 8; ++v) {
        if (std::find(seeds.begin(), seeds.end(), v) != seeds.end()) continue;
        ensure(extend_vertex(g, cover, packing, v),
               "degree-3 extension failed on the Wagner graph");
    }
    ensure(check_packing(g, cover, packing, s).ok(), "Wagner packing failed its check");
    return packing;
}

int extend_clique_precoloring(const Graph& g, const Cover& cover,
                              Packing& packing, int a, int b) {
    require(a >= 0 && a < g.n && b >= 0 && b < g.n && g.has_edge(a, b),
            "precolored pair must be an edge");
    for (int j = 0; j < packing.s; ++j)
        require(packing.colored(j, a) && packing.colored(j, b),
                "both endpoints must be fully colored");
    std::vector<int> common;
    std::set_intersection(g.adj[a].begin(), g.adj[a].end(), g.adj[b].begin(),
                          g.adj[b].end(), std::back_inserter(common));
    require(!common.empty(), "edge lies in no triangle");
    int w = common.front();
    ensure(extend_vertex(g, cover, packing, w),
           "two colored neighbors fit within the degree <= t/2 guarantee");
    return w;
}

namespace {

Cover restrict_cover(const Cover& global, const Graph& piece_g,
                     const std::vector<int>& to_global) {
    Cover local(global.t());
    const int t = global.t();
    for (auto [a, b] : piece_g.edges()) {
        int ga = to_global[a], gb = to_global[b];
        ensure(global.has_matching(ga, gb), "composed cover lost an edge");
        std::vector<int> one_line(t);
        for (int c = 1; c <= t; ++c) one_line[c - 1] = global.map_color(ga, gb, c);
        local.set_matching(a, b, Perm::from_one_line(one_line));
    }
    return local;
}

/// Packs one piece so that its colorings extend the colors already fixed
/// at the glue vertices, which the caller has copied into `seed`.
Packing pack_piece(const Piece& piece, const Cover& local, Packing seed,
                   const std::vector<int>& glue_local, std::ostream* trace) {
    const Graph& g = piece.emb.g;
    if (piece.kind == Piece::Kind::M8) return pack_m8(g, local, 3, std::move(seed));

    if (g.n <= 3) {
        // Too small to triangulate; every vertex sees at most two colored
        // neighbors, so ascending extensions suffice.
        for (int v = 0; v < g.n; ++v) {
            if (std::find(glue_local.begin(), glue_local.end(), v) !=
                glue_local.end())
                continue;
            ensure(extend_vertex(g, local, seed, v), "tiny piece extension failed");
        }
        ensure(check_packing(g, local, seed, 3).ok(), "tiny piece packing failed");
        return seed;
    }

    TriangulationResult tri = triangulate(piece.emb, -1);
    Cover cover = local;
    for (auto [u, v] : tri.added_edges) cover.set_matching(u, v, Perm::identity(6));
    const Graph& tg = tri.emb.g;

    std::array<int, 3> triangle{};
    std::vector<int> colored = glue_local;
    if (colored.empty()) {
        ensure(extend_vertex(tg, cover, seed, 0), "seeding vertex 0 failed");
        colored.push_back(0);
    }
    if (colored.size() == 1) {
        // Least triangle through the colored vertex: first adjacent pair
        // among its neighbors, which exists in a maximal planar graph.
        int v = colored[0], x = -1, y = -1;
        for (std::size_t i = 0; i < tg.adj[v].size() && x < 0; ++i)
            for (std::size_t k = i + 1; k < tg.adj[v].size() && x < 0; ++k)
                if (tg.has_edge(tg.adj[v][i], tg.adj[v][k])) {
                    x = tg.adj[v][i];
                    y = tg.adj[v][k];
                }
        ensure(x >= 0, "maximal planar piece has a triangle through each vertex");
        ensure(extend_vertex(tg, cover, seed, x), "seeding second corner failed");
        ensure(extend_vertex(tg, cover, seed, y), "seeding third corner failed");
        triangle = {v, x, y};
    } else if (colored.size() == 2) {
        int w = extend_clique_precoloring(tg, cover, seed, colored[0], colored[1]);
        triangle = {colored[0], colored[1], w};
    } else {
        triangle = {colored[0], colored[1], colored[2]};
    }

    std::array<std::array<int, 3>, 3> phi0{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) phi0[i][j] = seed.color(j, triangle[i]);
    return pack_planar(tri.emb, cover, triangle, phi0, trace);
}

}  // namespace

Packing pack_clique_sum(const CliqueSumTree& tree, const Graph& declared,
                        const Cover& cover, std::ostream* trace) {
    ComposedGraph comp = build_composed_graph(tree);
    require(cover.t() == 6, "clique-sum packing uses a 6-cover");
    require(declared.n == comp.g.n,
            "declared graph has " + std::to_string(declared.n) +
                " vertices, the composition has " + std::to_string(comp.g.n));
    std::set<std::pair<int, int>> glue(comp.glue_edges.begin(),
                                       comp.glue_edges.end());
    for (auto [u, v] : declared.edges())
        require(comp.g.has_edge(u, v), "declared edge " + std::to_string(u) + "," +
                                           std::to_string(v) +
                                           " is not in the composition");
    Cover working = cover;
    for (auto [u, v] : comp.g.edges()) {
        if (declared.has_edge(u, v)) {
            require(cover.has_matching(u, v), "cover is missing the matching of " +
                                                  std::to_string(u) + "," +
                                                  std::to_string(v));
        } else {
            require(glue.count({u, v}),
                    "edge " + std::to_string(u) + "," + std::to_string(v) +
                        " may only be dropped from a glue clique");
            if (!working.has_matching(u, v))
                working.set_matching(u, v, Perm::identity(6));
        }
    }

    Packing packing = Packing::make_empty(3, comp.g.n);
    const int base = tree.joins.empty() ? 0 : tree.joins[0].left;

    auto run_piece = [&](int index, const std::vector<std::pair<int, int>>& glue_pairs) {
        const Piece& piece = tree.pieces[index];
        const auto& map = comp.piece_to_global[index];
        Cover local = restrict_cover(working, piece.emb.g, map);
        Packing seed = Packing::make_empty(3, piece.emb.g.n);
        std::vector<int> glue_local;
        for (auto [g_id, l_id] : glue_pairs) {
            glue_local.push_back(l_id);
            for (int j = 0; j < 3; ++j) {
                ensure(packing.colored(j, g_id), "glue vertex left uncolored");
                seed.set_color(j, l_id, packing.color(j, g_id));
            }
        }
        if (trace)
            *trace << "piece " << index
                   << (piece.kind == Piece::Kind::M8 ? " m8" : " planar")
                   << " n=" << piece.emb.g.n << " glue=" << glue_local.size()
                   << "\n";
        Packing local_packing;
        try {
            local_packing = pack_piece(piece, local, std::move(seed), glue_local, trace);
        } catch (const InputError& e) {
            throw InputError(piece_tag(index) + e.what());
        }
        for (int v = 0; v < piece.emb.g.n; ++v)
            for (int j = 0; j < 3; ++j) {
                int c = local_packing.color(j, v);
                ensure(c != 0, "piece packing left a vertex uncolored");
                if (packing.colored(j, map[v]))
                    ensure(packing.color(j, map[v]) == c,
                           "glue colors disagree across a join");
                else
                    packing.set_color(j, map[v], c);
            }
    };

    run_piece(base, {});
    for (const Join& jn : tree.joins) run_piece(jn.right, jn.identify);

    ensure(check_packing(comp.g, working, packing, 3).ok(),
           "composed packing failed its check");
    ensure(check_packing(declared, cover, packing, 3).ok(),
           "declared-graph restriction failed its check");
    return packing;
}

}  // namespace corrpack
