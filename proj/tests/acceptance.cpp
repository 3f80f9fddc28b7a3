// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion restates its expectation from scratch instead of reusing
// the library's internal tables, so a shared mistake cannot hide here.

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "corrpack/compose.hpp"
#include "corrpack/error.hpp"
#include "corrpack/instance_gen.hpp"
#include "corrpack/lowerbound.hpp"
#include "corrpack/matching.hpp"
#include "corrpack/oracle.hpp"
#include "corrpack/planar.hpp"
#include "corrpack/rng.hpp"

using namespace corrpack;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << s << " s";
    return out.str();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// 1. Three disjoint colorings from every random 6-covered clique-sum tree.
Outcome criterion_clique_sum_trees() {
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const TreeInstance inst = make_tree_instance(seed);
        const auto start = Clock::now();
        const Packing packing =
            pack_clique_sum(inst.tree, inst.declared, inst.cover);
        const auto report = check_packing(inst.declared, inst.cover, packing, 3);
        const double dt = seconds_since(start);
        worst = std::max(worst, dt);
        if (!report.ok())
            return {false, "seed " + std::to_string(seed) + ": " + report.to_string()};
        if (dt >= 1.0)
            return {false, "seed " + std::to_string(seed) + " took " + fmt_seconds(dt)};
    }
    return {true, "500/500 packed and verified, slowest " + fmt_seconds(worst)};
}

// 2. The near-triangulation engine honors its per-coloring lists.
Outcome criterion_near_triangulations() {
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const NearTriInstance inst = make_key_instance(seed);
        const auto start = Clock::now();
        const Packing packing = pack_near_triangulation(inst);
        const double dt = seconds_since(start);
        worst = std::max(worst, dt);
        if (!check_packing(inst.emb.g, inst.cover, packing, 3).ok())
            return {false, "seed " + std::to_string(seed) + ": check failed"};
        for (int v = 0; v < inst.emb.g.n; ++v) {
            if (v == inst.boundary.verts[0] || v == inst.boundary.verts[1]) continue;
            for (int j = 0; j < 3; ++j)
                if (!inst.lists.at(j, v).contains(packing.color(j, v)))
                    return {false, "seed " + std::to_string(seed) +
                                       ": color outside its list at vertex " +
                                       std::to_string(v)};
        }
        if (dt >= 2.0)
            return {false, "seed " + std::to_string(seed) + " took " + fmt_seconds(dt)};
    }
    return {true, "1000/1000 packed within lists, slowest " + fmt_seconds(worst)};
}

// 3. Reserved partitions across every canonical key and pair swap.
Outcome criterion_reserved_partitions() {
    struct Row {
        std::array<int, 3> key;
        std::array<std::array<int, 2>, 3> parts;
    };
    // The eight canonical forbidden triples and their reserved pairs for
    // the lists {1,2,3,4}, {1,2,5,6}, {3,4,5,6}.
    const Row rows[8] = {
        {{1, 2, 3}, {{{2, 3}, {1, 5}, {4, 6}}}},
        {{1, 2, 5}, {{{2, 3}, {1, 5}, {4, 6}}}},
        {{1, 5, 3}, {{{2, 3}, {1, 6}, {4, 5}}}},
        {{1, 5, 6}, {{{2, 3}, {1, 6}, {4, 5}}}},
        {{3, 1, 4}, {{{1, 4}, {2, 5}, {3, 6}}}},
        {{3, 1, 5}, {{{1, 4}, {2, 5}, {3, 6}}}},
        {{3, 5, 4}, {{{1, 4}, {2, 6}, {3, 5}}}},
        {{3, 5, 6}, {{{1, 4}, {2, 6}, {3, 5}}}},
    };
    const std::array<ColorSet, 3> lists = {ColorSet::of({1, 2, 3, 4}),
                                           ColorSet::of({1, 2, 5, 6}),
                                           ColorSet::of({3, 4, 5, 6})};
    auto swap_color = [](int c, int mask) {
        if ((mask & 4) && (c == 1 || c == 2)) return 3 - c;
        if ((mask & 2) && (c == 3 || c == 4)) return 7 - c;
        if ((mask & 1) && (c == 5 || c == 6)) return 11 - c;
        return c;
    };

    // The output must be a tabulated row transported by a pair swap that
    // carries the forbidden triple onto that row's key.  A swap acting only
    // on pairs absent from the triple leaves the input unchanged, so the
    // transporting mask is existential, not the generating one.
    auto is_transported_row = [&](const std::array<int, 3>& forbidden,
                                  const ReservedPartition& got) {
        for (const Row& row : rows)
            for (int m = 0; m < 8; ++m) {
                bool key_match = true;
                for (int j = 0; j < 3; ++j)
                    key_match &= swap_color(row.key[j], m) == forbidden[j];
                if (!key_match) continue;
                bool parts_match = true;
                for (int j = 0; j < 3; ++j) {
                    ColorSet part;
                    for (int c : row.parts[j]) part.insert(swap_color(c, m));
                    parts_match &= part == got.parts[j];
                }
                if (parts_match) return true;
            }
        return false;
    };

    int cases = 0;
    for (const Row& row : rows)
        for (int mask = 0; mask < 8; ++mask) {
            std::array<int, 3> forbidden{};
            for (int j = 0; j < 3; ++j)
                forbidden[j] = swap_color(row.key[j], mask);
            const ReservedPartition got = reserved_partition_table(lists, forbidden);
            const char* tag = mask == 0 ? " canonical" : "";
            if (mask == 0)
                for (int j = 0; j < 3; ++j)
                    if (got.parts[j] != ColorSet::of({row.parts[j][0], row.parts[j][1]}))
                        return {false, "canonical key " + std::to_string(row.key[0]) +
                                           std::to_string(row.key[1]) +
                                           std::to_string(row.key[2]) +
                                           " is not returned verbatim"};
            if (!is_transported_row(forbidden, got))
                return {false, "output is not a transported row at key " +
                                   std::to_string(row.key[0]) +
                                   std::to_string(row.key[1]) +
                                   std::to_string(row.key[2]) + " mask " +
                                   std::to_string(mask) + tag};
            ColorSet all;
            for (int j = 0; j < 3; ++j) {
                if (got.parts[j].size() != 2 ||
                    (got.parts[j] & lists[j]) != got.parts[j] ||
                    got.parts[j].contains(forbidden[j]))
                    return {false, "invalid pair at mask " + std::to_string(mask)};
                all |= got.parts[j];
            }
            if (all != ColorSet::full(6))
                return {false, "pairs do not partition [6]"};
            const ReservedPartition searched =
                reserved_partition_search(lists, forbidden);
            ColorSet sall;
            for (int j = 0; j < 3; ++j) {
                if (searched.parts[j].size() != 2 ||
                    (searched.parts[j] & lists[j]) != searched.parts[j] ||
                    searched.parts[j].contains(forbidden[j]))
                    return {false, "search disagrees at mask " + std::to_string(mask)};
                sall |= searched.parts[j];
            }
            if (sall != ColorSet::full(6))
                return {false, "search pairs do not partition [6]"};
            ++cases;
        }

    // The worked example with its own lists and forbidden triple.
    const std::array<ColorSet, 3> ex_lists = {ColorSet::of({1, 2, 4, 6}),
                                              ColorSet::of({1, 3, 4, 5}),
                                              ColorSet::of({2, 3, 5, 6})};
    const ReservedPartition ex = reserved_partition_table(ex_lists, {4, 1, 6});
    if (ex.parts[0] != ColorSet::of({1, 6}) || ex.parts[1] != ColorSet::of({4, 5}) ||
        ex.parts[2] != ColorSet::of({2, 3}))
        return {false, "worked example produced the wrong partition"};
    ++cases;

    return {true, std::to_string(cases) + "/65 cases exact"};
}

// 4. The 216,000-candidate refutation certificate.
Outcome criterion_certificate() {
    const auto start = Clock::now();
    const RefutationCertificate cert = verify_nonpackable(1, 3);
    const double dt = seconds_since(start);
    if (cert.candidates_checked != 216000)
        return {false, "checked " + std::to_string(cert.candidates_checked)};
    if (cert.candidates_refuted != 216000 || !cert.all_refuted)
        return {false, "refuted " + std::to_string(cert.candidates_refuted)};
    for (const auto& [rank, wit] : cert.samples)
        for (const ColorSet& res : wit.residual)
            if (res.size() != 2)
                return {false, "sample residual size " + std::to_string(res.size())};
    if (dt >= 60.0) return {false, "took " + fmt_seconds(dt)};
    return {true, "216000/216000 refuted in " + fmt_seconds(dt)};
}

// 5. The four-cycle calibrations: colorable 3-covers, a bad 3-cover for
// packing, and pack-perfect 4-covers.
Outcome criterion_cycle_calibration() {
    const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto start = Clock::now();

    if (search_bad_cover(c4, 3, 1).has_value())
        return {false, "some 3-cover of C4 admits no coloring"};

    const auto bad = search_bad_cover(c4, 3, 3);
    if (!bad.has_value())
        return {false, "every 3-cover of C4 admits a 3-packing"};
    if (find_packing_exhaustive(c4, *bad, 3).has_value())
        return {false, "the bad 3-cover witness admits a 3-packing after all"};

    if (search_bad_cover(c4, 4, 4, {4'000'000'000ULL}).has_value())
        return {false, "some 4-cover of C4 admits no 4-packing"};

    const double dt = seconds_since(start);
    if (dt >= 600.0) return {false, "took " + fmt_seconds(dt)};
    return {true, "1296 + 331776 covers swept in " + fmt_seconds(dt)};
}

// 6. Vertex extension whenever the degree is at most half the colors.
Outcome criterion_vertex_extension() {
    Rng rng(4242);
    const int kTrials = 10000;
    for (int trial = 0; trial < kTrials; ++trial) {
        const int t = rng.range_int(4, 6);
        const int s = rng.range_int(1, t);
        const int n = rng.range_int(4, 12);
        const int v = n - 1;
        const int cap = t / 2;

        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (rng.chance(0.35)) edges.emplace_back(a, b);
        std::vector<int> others(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i) others[static_cast<std::size_t>(i)] = i;
        for (int i = v - 1; i > 0; --i)
            std::swap(others[static_cast<std::size_t>(i)],
                      others[static_cast<std::size_t>(rng.below(
                          static_cast<std::uint64_t>(i) + 1))]);
        const int deg = rng.range_int(0, cap);
        for (int i = 0; i < deg; ++i) edges.emplace_back(v, others[static_cast<std::size_t>(i)]);

        const Graph g = build_graph(n, edges);
        const Cover cover = random_cover(g, t, rng.next_u64());
        Packing packing = Packing::make_empty(s, n);
        for (int u : others)
            if (rng.chance(0.65)) extend_vertex(g, cover, packing, u);

        if (!extend_vertex(g, cover, packing, v))
            return {false, "extension failed at trial " + std::to_string(trial)};
        if (!check_packing(g, cover, packing, 0).ok())
            return {false, "extension broke the packing at trial " +
                               std::to_string(trial)};
    }
    return {true, std::to_string(kTrials) + "/" + std::to_string(kTrials) +
                      " extensions succeeded"};
}

// 7. The exhaustive packer agrees with the constructive pipeline on every
// fixture small enough to enumerate.
Outcome criterion_oracle_agreement() {
    const std::vector<std::pair<FixtureKind, int>> fixtures = {
        {FixtureKind::Wheel, 3},
        {FixtureKind::Wheel, 4},
        {FixtureKind::Wheel, 5},
        {FixtureKind::Wheel, 6},
        {FixtureKind::DoubleWheel, 3},
        {FixtureKind::DoubleWheel, 4},
        {FixtureKind::DoubleWheel, 5},
        {FixtureKind::StackedTriangulation, 3},
        {FixtureKind::StackedTriangulation, 4},
        {FixtureKind::StackedTriangulation, 5},
        {FixtureKind::StackedTriangulation, 6},
        {FixtureKind::StackedTriangulation, 7},
        {FixtureKind::TriangulatedGrid, 2},
    };
    int cases = 0;
    for (auto [kind, size] : fixtures)
        for (std::uint64_t seed : {1, 2, 3}) {
            const NearTriInstance inst = make_fixture_instance(kind, size, seed);
            const Packing built = pack_near_triangulation(inst);
            if (!check_packing(inst.emb.g, inst.cover, built, 3).ok())
                return {false, "constructive failure at case " + std::to_string(cases)};
            if (!find_packing_exhaustive(inst.emb.g, inst.cover, 3).has_value())
                return {false, "oracle found no packing at case " + std::to_string(cases)};
            ++cases;
        }
    return {true, std::to_string(cases) + " fixture covers agree"};
}

// 8. A disjoint second coloring for every random 3-degenerate graph.
Outcome criterion_second_colorings() {
    Rng rng(31337);
    const int kTrials = 1000;
    for (int trial = 0; trial < kTrials; ++trial) {
        const int n = rng.range_int(4, 30);
        std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
        for (int v = 3; v < n; ++v) {
            const int k = rng.range_int(1, 3);
            std::vector<int> picked;
            while (static_cast<int>(picked.size()) < k) {
                const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
                if (std::find(picked.begin(), picked.end(), u) == picked.end())
                    picked.push_back(u);
            }
            for (int u : picked) edges.emplace_back(u, v);
        }
        const Graph g = build_graph(n, edges);
        const Cover cover = random_cover(g, 5, rng.next_u64());

        // Ascending greedy: every vertex has at most three earlier
        // neighbors, so five colors always leave a choice.
        std::vector<int> phi1(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            ColorSet allowed = ColorSet::full(5);
            for (int u : g.adj[v])
                if (u < v) allowed.erase(cover.map_color(u, v, phi1[static_cast<std::size_t>(u)]));
            phi1[static_cast<std::size_t>(v)] = allowed.least();
        }

        const std::vector<int> phi2 = second_coloring_greedy(g, cover, phi1);
        Packing both{2, {phi1, phi2}};
        if (!check_packing(g, cover, both, 2).ok())
            return {false, "pair check failed at trial " + std::to_string(trial)};
    }
    return {true, std::to_string(kTrials) + "/" + std::to_string(kTrials) +
                      " second colorings found"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
        {"clique-sum trees pack under random 6-covers", criterion_clique_sum_trees},
        {"near-triangulations pack within their lists", criterion_near_triangulations},
        {"reserved partitions match the tabulated pairs", criterion_reserved_partitions},
        {"the 5-cover refutation certificate is total", criterion_certificate},
        {"four-cycle cover calibration", criterion_cycle_calibration},
        {"half-degree vertex extension never fails", criterion_vertex_extension},
        {"exhaustive search confirms constructive packings", criterion_oracle_agreement},
        {"3-degenerate graphs admit disjoint second colorings", criterion_second_colorings},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << (i + 1) << " (" << criteria[i].first
                  << "): " << (out.pass ? "pass" : "FAIL");
        if (!out.detail.empty()) std::cout << " [" << out.detail << "]";
        std::cout << "\n" << std::flush;
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
