#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "corrpack/instance_gen.hpp"
#include "corrpack/planar.hpp"
#include "corrpack/rng.hpp"

using namespace corrpack;

namespace {

std::array<ColorSet, 3> canonical_lists() {
    return {ColorSet::of({1, 2, 3, 4}), ColorSet::of({1, 2, 5, 6}),
            ColorSet::of({3, 4, 5, 6})};
}

bool valid_partition(const ReservedPartition& rp,
                     const std::array<ColorSet, 3>& lists,
                     const std::array<int, 3>& f) {
    ColorSet u;
    for (int j = 0; j < 3; ++j) {
        if (rp.parts[j].size() != 2) return false;
        if ((rp.parts[j] & lists[j]) != rp.parts[j]) return false;
        if (rp.parts[j].contains(f[j])) return false;
        u |= rp.parts[j];
    }
    return u == ColorSet::full(6);
}

ColorSet relabel(ColorSet s, const std::vector<int>& perm) {
    ColorSet out;
    for (int c : s.to_vector()) out.insert(perm[c - 1]);
    return out;
}

// Deterministic disjoint seed pair that is proper along the first boundary
// edge of the instance.
void seed_precolor(NearTriInstance& inst) {
    const int w1 = inst.boundary.verts[0], w2 = inst.boundary.verts[1];
    ColorSet used;
    for (int j = 0; j < 3; ++j) {
        inst.precolor[0][j] = j + 1;
        ColorSet cand = ColorSet::full(6).minus(used);
        cand.erase(inst.cover.map_color(w1, w2, j + 1));
        inst.precolor[1][j] = cand.least();
        used.insert(inst.precolor[1][j]);
    }
}

void check_instance_packing(const NearTriInstance& inst, const Packing& p) {
    CHECK(p.total());
    CHECK(check_packing(inst.emb.g, inst.cover, p, 3).ok());
    for (int h = 0; h < 2; ++h)
        for (int j = 0; j < 3; ++j)
            CHECK(p.color(j, inst.boundary.verts[h]) == inst.precolor[h][j]);
    for (int v = 0; v < inst.emb.g.n; ++v) {
        if (v == inst.boundary.verts[0] || v == inst.boundary.verts[1]) continue;
        for (int j = 0; j < 3; ++j)
            CHECK(inst.lists.at(j, v).contains(p.color(j, v)));
    }
}

}  // namespace

TEST_CASE("paired list structure recognition") {
    CHECK(has_paired_list_structure(canonical_lists()));
    CHECK(has_paired_list_structure({ColorSet::of({1, 2, 4, 6}),
                                     ColorSet::of({1, 3, 4, 5}),
                                     ColorSet::of({2, 3, 5, 6})}));
    CHECK_FALSE(has_paired_list_structure({ColorSet::of({1, 2, 3}),
                                           ColorSet::of({1, 2, 5, 6}),
                                           ColorSet::of({3, 4, 5, 6})}));
    CHECK_FALSE(has_paired_list_structure({ColorSet::of({1, 2, 3, 4}),
                                           ColorSet::of({1, 2, 3, 4}),
                                           ColorSet::of({3, 4, 5, 6})}));
    CHECK_FALSE(has_paired_list_structure({ColorSet::of({1, 2, 3, 4}),
                                           ColorSet::of({1, 2, 5, 6}),
                                           ColorSet::of({1, 4, 5, 6})}));
}

TEST_CASE("normalization replaces out-of-list colors away from the others") {
    auto lists = canonical_lists();
    CHECK(normalize_forbidden(lists, {1, 2, 3}) == std::array<int, 3>{1, 2, 3});
    // 5 is outside the first list; the replacement must dodge 1 and 3.
    CHECK(normalize_forbidden(lists, {5, 1, 3}) == std::array<int, 3>{2, 1, 3});
    auto rp = reserved_partition_search(lists, {5, 1, 3});
    CHECK(valid_partition(rp, lists, {2, 1, 3}));
}

TEST_CASE("partition search returns the least valid partition") {
    auto lists = canonical_lists();
    std::array<int, 3> f = {1, 2, 3};
    auto all = reserved_partition_all(lists, f);
    REQUIRE(!all.empty());
    for (const auto& rp : all) CHECK(valid_partition(rp, lists, f));
    CHECK(reserved_partition_search(lists, f) == all.front());
    auto key = [](const ReservedPartition& rp) {
        return std::array<std::uint64_t, 3>{rp.parts[0].raw(), rp.parts[1].raw(),
                                            rp.parts[2].raw()};
    };
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(key(all[i - 1]) < key(all[i]));
}

TEST_CASE("table rows are returned verbatim on the canonical lists") {
    struct Row {
        std::array<int, 3> f;
        std::array<ColorSet, 3> parts;
    };
    const Row rows[] = {
        {{1, 2, 3}, {ColorSet::of({2, 3}), ColorSet::of({1, 5}), ColorSet::of({4, 6})}},
        {{1, 2, 5}, {ColorSet::of({2, 3}), ColorSet::of({1, 5}), ColorSet::of({4, 6})}},
        {{1, 5, 3}, {ColorSet::of({2, 3}), ColorSet::of({1, 6}), ColorSet::of({4, 5})}},
        {{1, 5, 6}, {ColorSet::of({2, 3}), ColorSet::of({1, 6}), ColorSet::of({4, 5})}},
        {{3, 1, 4}, {ColorSet::of({1, 4}), ColorSet::of({2, 5}), ColorSet::of({3, 6})}},
        {{3, 1, 5}, {ColorSet::of({1, 4}), ColorSet::of({2, 5}), ColorSet::of({3, 6})}},
        {{3, 5, 4}, {ColorSet::of({1, 4}), ColorSet::of({2, 6}), ColorSet::of({3, 5})}},
        {{3, 5, 6}, {ColorSet::of({1, 4}), ColorSet::of({2, 6}), ColorSet::of({3, 5})}},
    };
    for (const auto& row : rows) {
        auto rp = reserved_partition_table(canonical_lists(), row.f);
        CHECK(rp.parts == row.parts);
    }
}

TEST_CASE("worked example returns the published partition") {
    std::array<ColorSet, 3> lists = {ColorSet::of({1, 2, 4, 6}),
                                     ColorSet::of({1, 3, 4, 5}),
                                     ColorSet::of({2, 3, 5, 6})};
    std::array<int, 3> f = {4, 1, 6};
    auto rp = reserved_partition_table(lists, f);
    CHECK(rp.parts[0] == ColorSet::of({1, 6}));
    CHECK(rp.parts[1] == ColorSet::of({4, 5}));
    CHECK(rp.parts[2] == ColorSet::of({2, 3}));
    CHECK(valid_partition(reserved_partition_search(lists, f), lists, f));
}

TEST_CASE("table and search succeed on every distinct in-list triple") {
    Rng rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        auto perm = trial == 0 ? std::vector<int>{1, 2, 3, 4, 5, 6}
                               : rng.permutation(6);
        std::array<ColorSet, 3> lists;
        auto base = canonical_lists();
        for (int j = 0; j < 3; ++j) lists[j] = relabel(base[j], perm);
        REQUIRE(has_paired_list_structure(lists));
        int count = 0;
        for (int c1 : lists[0].to_vector())
            for (int c2 : lists[1].to_vector())
                for (int c3 : lists[2].to_vector()) {
                    if (c1 == c2 || c1 == c3 || c2 == c3) continue;
                    ++count;
                    std::array<int, 3> f = {c1, c2, c3};
                    CHECK(valid_partition(reserved_partition_search(lists, f),
                                          lists, f));
                    CHECK(valid_partition(reserved_partition_table(lists, f),
                                          lists, f));
                }
        CHECK(count == 40);
    }
}

TEST_CASE("partition search rejects unstructured lists") {
    std::array<ColorSet, 3> bad = {ColorSet::of({1, 2, 3, 4}),
                                   ColorSet::of({1, 2, 3, 4}),
                                   ColorSet::of({3, 4, 5, 6})};
    CHECK_THROWS_AS(reserved_partition_search(bad, {1, 2, 3}), InvariantError);
    CHECK_THROWS_AS(reserved_partition_table(bad, {1, 2, 3}), InvariantError);
}

TEST_CASE("triangle instance packs via the base case") {
    auto inst = make_fixture_instance(FixtureKind::StackedTriangulation, 3, 11);
    auto p = pack_near_triangulation(inst);
    check_instance_packing(inst, p);
}

TEST_CASE("wheel instances pack") {
    for (int size = 3; size <= 12; ++size) {
        auto inst = make_fixture_instance(FixtureKind::Wheel, size, 100 + size);
        auto p = pack_near_triangulation(inst);
        check_instance_packing(inst, p);
    }
}

TEST_CASE("mirrored wheel instance packs") {
    auto emb = make_fixture(FixtureKind::Wheel, 7, 0);
    for (auto& row : emb.rotations) std::reverse(row.begin(), row.end());
    auto faces = trace_faces(emb);
    std::vector<int> rim;
    for (int i = 1; i <= 7; ++i) rim.push_back(i);
    emb.outer_face = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (same_cycle(faces[i], rim)) emb.outer_face = i;
    REQUIRE(emb.outer_face >= 0);
    auto inst = dress_near_triangulation(std::move(emb), 3);
    auto p = pack_near_triangulation(inst);
    check_instance_packing(inst, p);
}

TEST_CASE("grid instances pack and exercise the chord split") {
    for (int size = 2; size <= 5; ++size) {
        auto inst = make_fixture_instance(FixtureKind::TriangulatedGrid, size,
                                          200 + size);
        std::ostringstream trace;
        auto p = pack_near_triangulation(inst, &trace);
        check_instance_packing(inst, p);
        CHECK(trace.str().find("chord") != std::string::npos);
    }
}

TEST_CASE("chord touching the seed vertex forces a relabel") {
    // 4-cycle with one chord from the first boundary vertex.
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    PlaneEmbedding emb;
    emb.g = g;
    emb.rotations = {{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}};
    auto faces = trace_faces(emb);
    emb.outer_face = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].size() == 4) emb.outer_face = i;
    REQUIRE(emb.outer_face >= 0);

    NearTriInstance inst;
    inst.emb = emb;
    inst.cover = random_cover(g, 6, 17);
    inst.boundary = BoundaryCycle{{0, 1, 2, 3}};
    REQUIRE(same_cycle(faces[emb.outer_face], inst.boundary.verts));
    inst.lists = ListSystem::make(3, 4, ColorSet::full(6));
    auto cl = canonical_lists();
    for (int v : {2, 3})
        for (int j = 0; j < 3; ++j) inst.lists.at(j, v) = cl[j];
    seed_precolor(inst);

    std::ostringstream trace;
    auto p = pack_near_triangulation(inst, &trace);
    check_instance_packing(inst, p);
    CHECK(trace.str().find("chord 0-2") != std::string::npos);
}

TEST_CASE("stacked triangulation instances pack") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto inst = make_fixture_instance(FixtureKind::StackedTriangulation,
                                          40, 300 + seed);
        auto p = pack_near_triangulation(inst);
        check_instance_packing(inst, p);
    }
}

TEST_CASE("random fixture instances pack") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto inst = make_key_instance(seed);
        auto p = pack_near_triangulation(inst);
        check_instance_packing(inst, p);
    }
}

TEST_CASE("instance validation rejects malformed input") {
    auto inst = make_fixture_instance(FixtureKind::Wheel, 6, 5);
    CHECK_NOTHROW(validate_near_tri_instance(inst));

    auto bad = inst;
    bad.precolor[0][1] = bad.precolor[0][0];
    CHECK_THROWS_AS(validate_near_tri_instance(bad), InputError);

    bad = inst;
    // Clash in the first coloring; the three w2 colors stay distinct.
    const int clash =
        bad.cover.map_color(bad.boundary.verts[0], bad.boundary.verts[1],
                            bad.precolor[0][0]);
    bad.precolor[1] = {clash, clash % 6 + 1, (clash % 6 + 1) % 6 + 1};
    CHECK_THROWS_AS(validate_near_tri_instance(bad), InputError);

    bad = inst;
    std::swap(bad.boundary.verts[1], bad.boundary.verts[2]);
    CHECK_THROWS_AS(validate_near_tri_instance(bad), InputError);

    bad = inst;
    bad.lists.at(0, 0) = ColorSet::of({1, 2, 3});  // interior hub of the wheel
    CHECK_THROWS_AS(validate_near_tri_instance(bad), InputError);

    bad = inst;
    bad.lists.at(1, bad.boundary.verts[3]) = ColorSet::of({1, 2, 3, 4});
    bad.lists.at(2, bad.boundary.verts[3]) = ColorSet::of({1, 2, 3, 4});
    CHECK_THROWS_AS(validate_near_tri_instance(bad), InputError);

    bad = inst;
    Cover partial(6);
    auto edges = bad.emb.g.edges();
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        partial.set_matching(edges[i].first, edges[i].second,
                             bad.cover.matching(edges[i].first, edges[i].second));
    bad.cover = partial;
    CHECK_THROWS_AS(validate_near_tri_instance(bad), InputError);
}

TEST_CASE("triangulate fills every face except the kept one") {
    std::vector<std::pair<int, int>> ce;
    for (int i = 0; i < 6; ++i) ce.emplace_back(i, (i + 1) % 6);
    PlaneEmbedding c6;
    c6.g = build_graph(6, ce);
    for (int i = 0; i < 6; ++i)
        c6.rotations.push_back({(i + 5) % 6, (i + 1) % 6});
    c6.outer_face = 0;

    auto orig_faces = trace_faces(c6);
    auto kept = triangulate(c6, 0);
    CHECK(kept.added_edges.size() == 3);
    auto faces = trace_faces(kept.emb);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (i == kept.emb.outer_face)
            CHECK(same_cycle(faces[i], orig_faces[0]));
        else
            CHECK(faces[i].size() == 3);
    }
    CHECK(kept.emb.g.n - kept.emb.g.edge_count() +
              static_cast<int>(faces.size()) ==
          2);

    auto full = triangulate(c6, -1);
    CHECK(full.added_edges.size() == 6);
    CHECK(full.emb.g.edge_count() == 3 * 6 - 6);
    for (const auto& f : trace_faces(full.emb)) CHECK(f.size() == 3);
}

TEST_CASE("triangulate keeps a triangulation unchanged") {
    auto emb = make_fixture(FixtureKind::StackedTriangulation, 8, 1);
    auto res = triangulate(emb, -1);
    CHECK(res.added_edges.empty());
}

TEST_CASE("triangulate rejects graphs with cut vertices") {
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    PlaneEmbedding emb;
    emb.g = g;
    emb.rotations = {{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}};
    auto faces = trace_faces(emb);
    int tri = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].size() == 3) tri = i;
    REQUIRE(tri >= 0);
    emb.outer_face = tri;
    CHECK_THROWS_AS(triangulate(emb, tri), InputError);
}

TEST_CASE("planar packing on a K4") {
    auto emb = make_fixture(FixtureKind::StackedTriangulation, 4, 2);
    auto cover = random_cover(emb.g, 6, 23);
    Rng rng(5);
    auto faces = trace_faces(emb);
    std::array<int, 3> tri = {faces[0][0], faces[0][1], faces[0][2]};
    auto pre = random_triangle_precolor(cover, tri[0], tri[1], tri[2], rng);
    auto p = pack_planar(emb, cover, tri, pre);
    CHECK(p.total());
    CHECK(check_packing(emb.g, cover, p, 3).ok());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(p.color(j, tri[i]) == pre[i][j]);
}

TEST_CASE("planar packing triangulates around a wheel face") {
    auto emb = make_fixture(FixtureKind::Wheel, 5, 0);
    auto cover = random_cover(emb.g, 6, 29);
    Rng rng(9);
    std::array<int, 3> tri = {0, 1, 2};
    REQUIRE(emb.g.has_edge(0, 1));
    REQUIRE(emb.g.has_edge(1, 2));
    REQUIRE(emb.g.has_edge(0, 2));
    auto pre = random_triangle_precolor(cover, 0, 1, 2, rng);
    auto p = pack_planar(emb, cover, tri, pre);
    CHECK(p.total());
    CHECK(check_packing(emb.g, cover, p, 3).ok());
}

TEST_CASE("planar packing splits at a separating triangle") {
    // Rim of the double wheel separates the two hubs.
    auto emb = make_fixture(FixtureKind::DoubleWheel, 3, 0);
    auto cover = random_cover(emb.g, 6, 31);
    Rng rng(13);
    std::array<int, 3> tri = {2, 3, 4};
    auto pre = random_triangle_precolor(cover, 2, 3, 4, rng);
    auto p = pack_planar(emb, cover, tri, pre);
    CHECK(p.total());
    CHECK(check_packing(emb.g, cover, p, 3).ok());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(p.color(j, tri[i]) == pre[i][j]);
}

TEST_CASE("planar packing over larger fixtures") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto emb = seed % 2 == 0
                       ? make_fixture(FixtureKind::StackedTriangulation, 50, seed)
                       : make_fixture(FixtureKind::TriangulatedGrid, 5, seed);
        auto cover = random_cover(emb.g, 6, 400 + seed);
        Rng rng(500 + seed);
        auto faces = trace_faces(emb);
        const FaceWalk* tri_face = nullptr;
        for (const auto& f : faces)
            if (f.size() == 3) {
                tri_face = &f;
                break;
            }
        REQUIRE(tri_face != nullptr);
        std::array<int, 3> tri = {(*tri_face)[0], (*tri_face)[1], (*tri_face)[2]};
        auto pre = random_triangle_precolor(cover, tri[0], tri[1], tri[2], rng);
        auto p = pack_planar(emb, cover, tri, pre);
        CHECK(p.total());
        CHECK(check_packing(emb.g, cover, p, 3).ok());
    }
}

TEST_CASE("planar packing rejects an improper seed") {
    auto emb = make_fixture(FixtureKind::StackedTriangulation, 4, 2);
    Cover cover(6);
    for (auto [u, v] : emb.g.edges())
        cover.set_matching(u, v, Perm::identity(6));
    auto faces = trace_faces(emb);
    std::array<int, 3> tri = {faces[0][0], faces[0][1], faces[0][2]};
    // Identity matchings make equal colors on adjacent vertices improper.
    std::array<std::array<int, 3>, 3> pre = {{{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
    CHECK_THROWS_AS(pack_planar(emb, cover, tri, pre), InputError);
}
