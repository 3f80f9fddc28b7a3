#include "corrpack/instance_gen.hpp"

#include <algorithm>
#include <utility>

#include "corrpack/error.hpp"

namespace corrpack {

namespace {

int pick_color(ColorSet cand, Rng& rng) {
    ensure(!cand.empty(), "no candidate colors left");
    auto v = cand.to_vector();
    return v[static_cast<std::size_t>(rng.below(v.size()))];
}

}  // namespace

NearTriInstance dress_near_triangulation(PlaneEmbedding emb, std::uint64_t seed) {
    Rng rng(seed);
    NearTriInstance inst;
    inst.boundary = validate_near_triangulation(emb);
    inst.cover = random_cover(emb.g, 6, rng.next_u64());
    inst.lists = ListSystem::make(3, emb.g.n, ColorSet::full(6));
    for (int p = 2; p < inst.boundary.size(); ++p) {
        auto c = rng.permutation(6);
        const int v = inst.boundary.verts[p];
        inst.lists.at(0, v) = ColorSet::of({c[0], c[1], c[2], c[3]});
        inst.lists.at(1, v) = ColorSet::of({c[0], c[1], c[4], c[5]});
        inst.lists.at(2, v) = ColorSet::of({c[2], c[3], c[4], c[5]});
    }
    const int w1 = inst.boundary.verts[0], w2 = inst.boundary.verts[1];
    ColorSet used1, used2;
    for (int j = 0; j < 3; ++j) {
        const int c1 = pick_color(ColorSet::full(6).minus(used1), rng);
        used1.insert(c1);
        ColorSet cand = ColorSet::full(6).minus(used2);
        cand.erase(inst.cover.map_color(w1, w2, c1));
        const int c2 = pick_color(cand, rng);
        used2.insert(c2);
        inst.precolor[0][j] = c1;
        inst.precolor[1][j] = c2;
    }
    inst.emb = std::move(emb);
    return inst;
}

NearTriInstance make_fixture_instance(FixtureKind kind, int size,
                                      std::uint64_t seed) {
    Rng rng(seed);
    const std::uint64_t fixture_seed = rng.next_u64();
    const std::uint64_t dress_seed = rng.next_u64();
    return dress_near_triangulation(make_fixture(kind, size, fixture_seed),
                                    dress_seed);
}

NearTriInstance make_key_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int kind = static_cast<int>(rng.below(4));
    FixtureKind fk;
    int size;
    switch (kind) {
        case 0:
            fk = FixtureKind::Wheel;
            size = rng.range_int(3, 150);
            break;
        case 1:
            fk = FixtureKind::DoubleWheel;
            size = rng.range_int(3, 100);
            break;
        case 2:
            fk = FixtureKind::StackedTriangulation;
            size = rng.range_int(3, 200);
            break;
        default:
            fk = FixtureKind::TriangulatedGrid;
            size = rng.range_int(2, 14);
            break;
    }
    return make_fixture_instance(fk, size, rng.next_u64());
}

namespace {

/// Triangles u < v < w in lexicographic order.
std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edges())
        for (int w : g.adj[v])
            if (w > v && g.has_edge(u, w)) out.push_back({u, v, w});
    return out;
}

PlaneEmbedding random_tree_piece(Rng& rng) {
    FixtureKind fk;
    int size;
    switch (rng.below(4)) {
        case 0:
            fk = FixtureKind::Wheel;
            size = rng.range_int(3, 20);
            break;
        case 1:
            fk = FixtureKind::DoubleWheel;
            size = rng.range_int(3, 20);
            break;
        case 2:
            fk = FixtureKind::StackedTriangulation;
            size = rng.range_int(4, 100);
            break;
        default:
            fk = FixtureKind::TriangulatedGrid;
            size = rng.range_int(2, 7);
            break;
    }
    return triangulate(make_fixture(fk, size, rng.next_u64()), -1).emb;
}

std::vector<int> sample_clique(const Graph& g, int r, Rng& rng) {
    if (r == 1) return {static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n)))};
    if (r == 2) {
        auto edges = g.edges();
        auto [u, v] = edges[static_cast<std::size_t>(rng.below(edges.size()))];
        return {u, v};
    }
    auto tris = all_triangles(g);
    ensure(!tris.empty(), "sampled a triangle from a triangle-free side");
    auto t = tris[static_cast<std::size_t>(rng.below(tris.size()))];
    return {t[0], t[1], t[2]};
}

}  // namespace

TreeInstance make_tree_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int piece_count = rng.range_int(1, 8);

    TreeInstance inst;
    for (int i = 0; i < piece_count; ++i) {
        if (piece_count > 1 && rng.chance(0.25))
            inst.tree.pieces.push_back(make_m8_piece());
        else
            inst.tree.pieces.push_back(make_planar_piece(random_tree_piece(rng)));
    }

    std::vector<int> order(static_cast<std::size_t>(piece_count));
    for (int i = 0; i < piece_count; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    const int base = order[0];

    // Accumulated composition, mirrored here so glue can be sampled from
    // it; id assignment matches build_composed_graph.
    std::vector<std::pair<int, int>> acc_edges =
        inst.tree.pieces[static_cast<std::size_t>(base)].emb.g.edges();
    int acc_n = inst.tree.pieces[static_cast<std::size_t>(base)].emb.g.n;
    for (int q = 1; q < piece_count; ++q) {
        const int right = order[static_cast<std::size_t>(q)];
        const Piece& piece = inst.tree.pieces[static_cast<std::size_t>(right)];
        const Graph acc = build_graph(acc_n, acc_edges);

        int r = rng.range_int(1, 3);
        if (piece.kind == Piece::Kind::M8) r = std::min(r, 2);
        if (r == 3 && all_triangles(acc).empty()) r = 2;

        Join jn;
        jn.left = q == 1 ? base : Join::kAcc;
        jn.right = right;
        jn.r = r;
        std::vector<int> acc_side = sample_clique(acc, r, rng);
        std::vector<int> loc_side = sample_clique(piece.emb.g, r, rng);
        rng.shuffle(loc_side);
        for (int i = 0; i < r; ++i)
            jn.identify.emplace_back(acc_side[static_cast<std::size_t>(i)],
                                     loc_side[static_cast<std::size_t>(i)]);
        inst.tree.joins.push_back(jn);

        std::vector<int> map(static_cast<std::size_t>(piece.emb.g.n), -1);
        for (int i = 0; i < r; ++i)
            map[static_cast<std::size_t>(loc_side[static_cast<std::size_t>(i)])] =
                acc_side[static_cast<std::size_t>(i)];
        for (int v = 0; v < piece.emb.g.n; ++v)
            if (map[static_cast<std::size_t>(v)] < 0)
                map[static_cast<std::size_t>(v)] = acc_n++;
        for (auto [a, b] : piece.emb.g.edges()) {
            const int ga = map[static_cast<std::size_t>(a)];
            const int gb = map[static_cast<std::size_t>(b)];
            acc_edges.emplace_back(std::min(ga, gb), std::max(ga, gb));
        }
    }

    ComposedGraph comp = build_composed_graph(inst.tree);
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : comp.g.edges()) {
        const bool glue = std::find(comp.glue_edges.begin(), comp.glue_edges.end(),
                                    std::pair<int, int>{u, v}) != comp.glue_edges.end();
        if (glue && rng.chance(0.2)) continue;
        kept.emplace_back(u, v);
    }
    inst.declared = build_graph(comp.g.n, kept);
    inst.cover = random_cover(inst.declared, 6, rng.next_u64());
    return inst;
}

std::array<std::array<int, 3>, 3> random_triangle_precolor(const Cover& cover,
                                                           int a, int b, int c,
                                                           Rng& rng) {
    std::array<std::array<int, 3>, 3> pre{};
    ColorSet ua, ub, uc;
    for (int j = 0; j < 3; ++j) {
        const int ca = pick_color(ColorSet::full(6).minus(ua), rng);
        ua.insert(ca);
        ColorSet cand_b = ColorSet::full(6).minus(ub);
        cand_b.erase(cover.map_color(a, b, ca));
        const int cb = pick_color(cand_b, rng);
        ub.insert(cb);
        ColorSet cand_c = ColorSet::full(6).minus(uc);
        cand_c.erase(cover.map_color(a, c, ca));
        cand_c.erase(cover.map_color(b, c, cb));
        const int cc = pick_color(cand_c, rng);
        uc.insert(cc);
        pre[0][j] = ca;
        pre[1][j] = cb;
        pre[2][j] = cc;
    }
    return pre;
}

}  // namespace corrpack
