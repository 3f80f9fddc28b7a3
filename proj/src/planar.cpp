#include "corrpack/planar.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "corrpack/error.hpp"
#include "corrpack/matching.hpp"

namespace corrpack {

namespace {

bool is_subset(ColorSet a, ColorSet b) { return (a & b) == a; }

}  // namespace

std::string ReservedPartition::to_string() const {
    return "(" + parts[0].to_string() + "," + parts[1].to_string() + "," +
           parts[2].to_string() + ")";
}

bool has_paired_list_structure(const std::array<ColorSet, 3>& lists) {
    for (const auto& l : lists)
        if (l.size() != 4) return false;
    if ((lists[0] | lists[1] | lists[2]) != ColorSet::full(6)) return false;
    if (!(lists[0] & lists[1] & lists[2]).empty()) return false;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if ((lists[a] & lists[b]).size() != 2) return false;
    return true;
}

std::array<int, 3> normalize_forbidden(const std::array<ColorSet, 3>& lists,
                                       std::array<int, 3> forbidden) {
    for (int j = 0; j < 3; ++j) {
        if (lists[j].contains(forbidden[j])) continue;
        ColorSet cand = lists[j];
        cand.erase(forbidden[(j + 1) % 3]);
        cand.erase(forbidden[(j + 2) % 3]);
        ensure(!cand.empty(), "no in-list replacement for a forbidden color");
        forbidden[j] = cand.least();
    }
    return forbidden;
}

std::vector<ReservedPartition> reserved_partition_all(
    const std::array<ColorSet, 3>& lists, std::array<int, 3> forbidden) {
    std::vector<ReservedPartition> out;
    for (int a1 = 1; a1 <= 6; ++a1) {
        for (int a2 = a1 + 1; a2 <= 6; ++a2) {
            ColorSet r1 = ColorSet::of({a1, a2});
            if (!is_subset(r1, lists[0]) || r1.contains(forbidden[0])) continue;
            std::vector<int> rem = ColorSet::full(6).minus(r1).to_vector();
            for (int p = 0; p < 4; ++p) {
                for (int q = p + 1; q < 4; ++q) {
                    ColorSet r2 = ColorSet::of({rem[p], rem[q]});
                    if (!is_subset(r2, lists[1]) || r2.contains(forbidden[1]))
                        continue;
                    ColorSet r3 = ColorSet::full(6).minus(r1).minus(r2);
                    if (!is_subset(r3, lists[2]) || r3.contains(forbidden[2]))
                        continue;
                    out.push_back(ReservedPartition{{r1, r2, r3}});
                }
            }
        }
    }
    return out;
}

ReservedPartition reserved_partition_search(const std::array<ColorSet, 3>& lists,
                                            std::array<int, 3> forbidden) {
    ensure(has_paired_list_structure(lists),
           "reserved partitions need paired list structure");
    auto all = reserved_partition_all(lists, normalize_forbidden(lists, forbidden));
    ensure(!all.empty(), "no reserved partition for structured lists");
    return all.front();
}

namespace {

struct TableRow {
    int key[3];
    int parts[3][2];
};

// Rows for the canonical lists {1,2,3,4}, {1,2,5,6}, {3,4,5,6}.  Every
// distinct in-list forbidden triple is carried onto one of the eight keys
// by swapping within the pairs {1,2}, {3,4}, {5,6}.
constexpr TableRow kPartitionTable[] = {
    {{1, 2, 3}, {{2, 3}, {1, 5}, {4, 6}}},
    {{1, 2, 5}, {{2, 3}, {1, 5}, {4, 6}}},
    {{1, 5, 3}, {{2, 3}, {1, 6}, {4, 5}}},
    {{1, 5, 6}, {{2, 3}, {1, 6}, {4, 5}}},
    {{3, 1, 4}, {{1, 4}, {2, 5}, {3, 6}}},
    {{3, 1, 5}, {{1, 4}, {2, 5}, {3, 6}}},
    {{3, 5, 4}, {{1, 4}, {2, 6}, {3, 5}}},
    {{3, 5, 6}, {{1, 4}, {2, 6}, {3, 5}}},
};

// Pair swaps keyed by a 3-bit mask: bit 2 swaps 1/2, bit 1 swaps 3/4,
// bit 0 swaps 5/6.  Involution, so it is its own inverse.
int pair_swap(int c, int mask) {
    if ((mask & 4) && (c == 1 || c == 2)) return 3 - c;
    if ((mask & 2) && (c == 3 || c == 4)) return 7 - c;
    if ((mask & 1) && (c == 5 || c == 6)) return 11 - c;
    return c;
}

}  // namespace

ReservedPartition reserved_partition_table(const std::array<ColorSet, 3>& lists,
                                           std::array<int, 3> forbidden) {
    ensure(has_paired_list_structure(lists),
           "reserved partitions need paired list structure");
    auto f = normalize_forbidden(lists, forbidden);

    // Rename colors pair by pair onto the canonical lists, orienting each
    // pair to fix as many colors as possible and ascending on ties.
    std::array<int, 7> pi{}, pi_inv{};
    auto assign = [&](ColorSet pair, int t1, int t2) {
        auto v = pair.to_vector();
        int s1 = v[0], s2 = v[1];
        int asc = (s1 == t1) + (s2 == t2);
        int desc = (s1 == t2) + (s2 == t1);
        if (desc > asc) std::swap(t1, t2);
        pi[s1] = t1;
        pi[s2] = t2;
        pi_inv[t1] = s1;
        pi_inv[t2] = s2;
    };
    assign(lists[0] & lists[1], 1, 2);
    assign(lists[0] & lists[2], 3, 4);
    assign(lists[1] & lists[2], 5, 6);

    const std::array<int, 3> fbar = {pi[f[0]], pi[f[1]], pi[f[2]]};
    for (int mask = 0; mask < 8; ++mask) {
        const int k0 = pair_swap(fbar[0], mask);
        const int k1 = pair_swap(fbar[1], mask);
        const int k2 = pair_swap(fbar[2], mask);
        for (const auto& row : kPartitionTable) {
            if (row.key[0] != k0 || row.key[1] != k1 || row.key[2] != k2)
                continue;
            ReservedPartition rp;
            for (int j = 0; j < 3; ++j)
                for (int c : row.parts[j])
                    rp.parts[j].insert(pi_inv[pair_swap(c, mask)]);
            ColorSet unionp;
            for (int j = 0; j < 3; ++j) {
                ensure(rp.parts[j].size() == 2 && is_subset(rp.parts[j], lists[j]) &&
                           !rp.parts[j].contains(f[j]),
                       "table produced an invalid reserved pair");
                unionp |= rp.parts[j];
            }
            ensure(unionp == ColorSet::full(6),
                   "table pairs do not partition the colors");
            return rp;
        }
    }
    throw InvariantError("forbidden triple not reachable in the partition table");
}

namespace {

std::uint64_t dirk(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::uint64_t undirk(int u, int v) {
    if (u > v) std::swap(u, v);
    return dirk(u, v);
}

Graph graph_from_rotations(const std::vector<std::vector<int>>& rot) {
    Graph g;
    g.n = static_cast<int>(rot.size());
    g.adj = rot;
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

// Neighbors of the rotation's owner strictly between a and b, ordered from
// the a side toward the b side.  Assumes a and b are cyclically adjacent
// around the other side, which holds when the owner is an outer vertex and
// a, b are its two neighbors along the outer face.
std::vector<int> fan_between(const std::vector<int>& row, int a, int b) {
    const int d = static_cast<int>(row.size());
    int pa = -1, pb = -1;
    for (int q = 0; q < d; ++q) {
        if (row[q] == a) pa = q;
        if (row[q] == b) pb = q;
    }
    ensure(pa >= 0 && pb >= 0, "fan endpoints missing from rotation");
    std::vector<int> fan;
    if (row[(pb + 1) % d] == a) {
        for (int q = (pa + 1) % d; q != pb; q = (q + 1) % d) fan.push_back(row[q]);
    } else if (row[(pa + 1) % d] == b) {
        for (int q = (pb + 1) % d; q != pa; q = (q + 1) % d) fan.push_back(row[q]);
        std::reverse(fan.begin(), fan.end());
    } else {
        ensure(false, "fan endpoints are not cyclically adjacent in the rotation");
    }
    return fan;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

struct SolveItem {
    std::vector<std::vector<int>> rot;
    std::vector<int> boundary;
};

struct ExtendItem {
    int v = -1;
    int prev = -1;
    ReservedPartition reserve;
};

// Work-stack evaluator for the boundary induction.  Invariants maintained
// across items: the first two boundary vertices are colored before the item
// is popped, every later boundary vertex has paired 4-lists, and interior
// vertices still hold all six colors.
class Engine {
public:
    Engine(const Cover& cover, ListSystem& lists, Packing& packing,
           std::ostream* trace)
        : cover_(cover), lists_(lists), packing_(packing), trace_(trace) {}

    void run(std::vector<std::vector<int>> rot, std::vector<int> boundary) {
        stack_.emplace_back(SolveItem{std::move(rot), std::move(boundary)});
        while (!stack_.empty()) {
            auto item = std::move(stack_.back());
            stack_.pop_back();
            if (std::holds_alternative<ExtendItem>(item))
                do_extend(std::get<ExtendItem>(item));
            else
                do_solve(std::move(std::get<SolveItem>(item)));
        }
    }

private:
    void do_extend(const ExtendItem& it) {
        for (int j = 0; j < 3; ++j) {
            ColorSet avail = it.reserve.parts[j];
            avail.erase(cover_.map_color(it.prev, it.v, packing_.color(j, it.prev)));
            ensure(!avail.empty(), "reserved pair exhausted at re-insertion");
            packing_.set_color(j, it.v, avail.least());
        }
        if (trace_) *trace_ << "extend v=" << it.v << "\n";
    }

    void do_solve(SolveItem item) {
        const auto& bnd = item.boundary;
        const int n = static_cast<int>(bnd.size());
        ensure(n >= 3, "boundary shrank below a triangle");
        for (int h = 0; h < 2; ++h)
            for (int j = 0; j < 3; ++j)
                ensure(packing_.colored(j, bnd[h]),
                       "boundary seed vertex is uncolored");
        int live = 0;
        for (const auto& row : item.rot)
            if (!row.empty()) ++live;
        if (trace_)
            *trace_ << "solve boundary=" << join_ints(bnd) << " live=" << live
                    << "\n";
        ensure(live >= 3, "region lost its boundary vertices");
        if (live == 3) {
            ensure(n == 3, "three-vertex region with a longer boundary");
            base_case(bnd);
            return;
        }
        const Graph region = graph_from_rotations(item.rot);
        auto chord = find_chord(BoundaryCycle{bnd}, region);
        if (!chord) {
            chordless_case(std::move(item));
            return;
        }
        auto [i, l] = *chord;
        if (i == 0) {
            // Reverse the cycle starting from the second vertex so the
            // chord no longer touches position 0; the seed pair stays in
            // the first two slots.
            std::vector<int> relabeled;
            relabeled.reserve(n);
            relabeled.push_back(bnd[1]);
            relabeled.push_back(bnd[0]);
            for (int p = n - 1; p >= 2; --p) relabeled.push_back(bnd[p]);
            item.boundary = std::move(relabeled);
            l = n + 1 - l;
            i = 1;
        }
        split_at_chord(std::move(item), i, l);
    }

    void base_case(const std::vector<int>& bnd) {
        const int w3 = bnd[2];
        std::vector<ColorSet> allowed(3);
        for (int j = 0; j < 3; ++j) {
            ColorSet l = lists_.at(j, w3);
            l.erase(cover_.map_color(bnd[0], w3, packing_.color(j, bnd[0])));
            l.erase(cover_.map_color(bnd[1], w3, packing_.color(j, bnd[1])));
            allowed[j] = l;
        }
        auto sdr = find_distinct_representatives(allowed, 6);
        ensure(sdr.has_value(), "triangle base case admits no distinct choice");
        for (int j = 0; j < 3; ++j) packing_.set_color(j, w3, (*sdr)[j]);
        if (trace_) *trace_ << "base v=" << w3 << "\n";
    }

    void split_at_chord(SolveItem item, int i, int l) {
        const auto& bnd = item.boundary;
        const int n = static_cast<int>(bnd.size());
        const int N = static_cast<int>(item.rot.size());
        ensure(i >= 1 && l - i >= 2 && l < n, "chord positions out of range");
        const int x = bnd[i], y = bnd[l];
        if (trace_) *trace_ << "chord " << x << "-" << y << "\n";

        auto faces = trace_faces_from_rotations(item.rot);
        std::unordered_map<std::uint64_t, int> face_of;
        for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
            const auto& w = faces[fi];
            const int k = static_cast<int>(w.size());
            for (int p = 0; p < k; ++p) face_of[dirk(w[p], w[(p + 1) % k])] = fi;
        }
        int fa = face_of.at(dirk(bnd[i], bnd[i + 1]));
        int fb = face_of.at(dirk(bnd[i + 1], bnd[i]));
        ensure((faces[fa].size() == 3) != (faces[fb].size() == 3),
               "boundary edge must separate the outer walk from a triangle");
        const int start = faces[fa].size() == 3 ? fa : fb;
        int outer = same_cycle(faces[fa], bnd) ? fa : fb;
        ensure(same_cycle(faces[outer], bnd),
               "stated boundary is not a face of the region");

        // Faces strictly inside the cycle boundary[i..l] + chord; its edges
        // block the flood.
        std::unordered_set<std::uint64_t> blocked;
        for (int p = i; p < l; ++p) blocked.insert(undirk(bnd[p], bnd[p + 1]));
        blocked.insert(undirk(x, y));
        std::vector<char> reached(faces.size(), 0);
        std::vector<int> todo = {start};
        reached[start] = 1;
        while (!todo.empty()) {
            int fi = todo.back();
            todo.pop_back();
            ensure(fi != outer, "flood crossed into the outer face");
            const auto& w = faces[fi];
            const int k = static_cast<int>(w.size());
            for (int p = 0; p < k; ++p) {
                int a = w[p], b = w[(p + 1) % k];
                if (blocked.count(undirk(a, b))) continue;
                int nb = face_of.at(dirk(b, a));
                if (!reached[nb]) {
                    reached[nb] = 1;
                    todo.push_back(nb);
                }
            }
        }

        std::vector<char> in_g2(N, 0);
        for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
            if (reached[fi])
                for (int v : faces[fi]) in_g2[v] = 1;
        for (int p = i; p <= l; ++p)
            ensure(in_g2[bnd[p]], "chord cycle vertex missing from its side");
        ensure(!in_g2[bnd[0]], "split leaked across the chord");

        std::vector<std::vector<int>> rot2(N);
        for (int v = 0; v < N; ++v) {
            if (!in_g2[v]) continue;
            if (v == x || v == y) {
                for (int w : item.rot[v])
                    if (in_g2[w]) rot2[v].push_back(w);
            } else {
                rot2[v] = item.rot[v];
            }
        }
        auto rot1 = std::move(item.rot);
        for (int v = 0; v < N; ++v) {
            if (!in_g2[v]) continue;
            if (v == x || v == y) {
                std::vector<int> keep;
                for (int w : rot1[v])
                    if (!in_g2[w] || w == x || w == y) keep.push_back(w);
                rot1[v] = std::move(keep);
            } else {
                rot1[v].clear();
            }
        }

        int live1 = 0, live2 = 0;
        for (int v = 0; v < N; ++v) {
            if (!rot1[v].empty()) ++live1;
            if (!rot2[v].empty()) ++live2;
        }
        ensure(live1 >= 3 && live2 >= 3, "degenerate side after chord split");

        std::vector<int> bnd1, bnd2;
        for (int p = 0; p <= i; ++p) bnd1.push_back(bnd[p]);
        for (int p = l; p < n; ++p) bnd1.push_back(bnd[p]);
        bnd2.push_back(y);
        bnd2.push_back(x);
        for (int p = i + 1; p < l; ++p) bnd2.push_back(bnd[p]);

        // The first side is processed to completion before the second is
        // popped, so the chord endpoints are colored by then.
        stack_.emplace_back(SolveItem{std::move(rot2), std::move(bnd2)});
        stack_.emplace_back(SolveItem{std::move(rot1), std::move(bnd1)});
    }

    void chordless_case(SolveItem item) {
        auto& rot = item.rot;
        const auto& bnd = item.boundary;
        const int n = static_cast<int>(bnd.size());
        const int wn = bnd[n - 1], w1 = bnd[0], wp = bnd[n - 2];

        std::array<int, 3> forbidden;
        std::array<ColorSet, 3> wl;
        for (int j = 0; j < 3; ++j) {
            forbidden[j] = cover_.map_color(w1, wn, packing_.color(j, w1));
            wl[j] = lists_.at(j, wn);
        }
        auto rp = reserved_partition_search(wl, forbidden);
        if (trace_)
            *trace_ << "reserve v=" << wn << " R=" << rp.to_string() << "\n";

        const std::vector<int> nbrs = rot[wn];
        std::vector<int> fan = fan_between(nbrs, w1, wp);
        ensure(!fan.empty(), "outer vertex of a chordless boundary has no fan");
        std::unordered_set<int> on_boundary(bnd.begin(), bnd.end());
        for (int xv : fan) {
            ensure(!on_boundary.count(xv), "fan vertex already on the boundary");
            std::array<ColorSet, 3> pruned;
            for (int j = 0; j < 3; ++j) {
                ensure(lists_.at(j, xv) == ColorSet::full(6),
                       "fan vertex was already restricted");
                ColorSet banned = cover_.map_set(wn, xv, rp.parts[j]);
                lists_.at(j, xv) = ColorSet::full(6).minus(banned);
                pruned[j] = lists_.at(j, xv);
            }
            ensure(has_paired_list_structure(pruned),
                   "pruned lists lost their structure");
        }

        for (int w : nbrs) {
            auto& row = rot[w];
            auto it = std::find(row.begin(), row.end(), wn);
            ensure(it != row.end(), "rotation system lost symmetry");
            row.erase(it);
        }
        rot[wn].clear();

        std::vector<int> nbnd(bnd.begin(), bnd.end() - 1);
        for (int m = static_cast<int>(fan.size()) - 1; m >= 0; --m)
            nbnd.push_back(fan[m]);

        stack_.emplace_back(ExtendItem{wn, wp, rp});
        stack_.emplace_back(SolveItem{std::move(rot), std::move(nbnd)});
    }

    const Cover& cover_;
    ListSystem& lists_;
    Packing& packing_;
    std::ostream* trace_;
    std::vector<std::variant<SolveItem, ExtendItem>> stack_;
};

}  // namespace

void validate_near_tri_instance(const NearTriInstance& inst) {
    const Graph& g = inst.emb.g;
    require(g.n >= 3, "instance needs at least three vertices");
    require(inst.cover.t() == 6, "packing instances use a 6-cover");
    require(inst.lists.s == 3 && inst.lists.n == g.n,
            "list system must hold three lists per vertex");
    for (auto [u, v] : g.edges())
        require(inst.cover.has_matching(u, v),
                "cover is missing the matching of edge " + std::to_string(u) +
                    "," + std::to_string(v));

    auto outer = validate_near_triangulation(inst.emb);
    require(same_cycle(outer.verts, inst.boundary.verts),
            "stated boundary is not the outer face");

    std::vector<char> onb(g.n, 0);
    for (int v : inst.boundary.verts) onb[v] = 1;
    for (int v = 0; v < g.n; ++v) {
        if (onb[v]) continue;
        for (int j = 0; j < 3; ++j)
            require(inst.lists.at(j, v) == ColorSet::full(6),
                    "interior vertex " + std::to_string(v) +
                        " must carry all six colors");
    }
    for (int p = 2; p < inst.boundary.size(); ++p) {
        const int v = inst.boundary.verts[p];
        std::array<ColorSet, 3> l = {inst.lists.at(0, v), inst.lists.at(1, v),
                                     inst.lists.at(2, v)};
        require(has_paired_list_structure(l),
                "boundary vertex " + std::to_string(v) +
                    " lacks paired 4-lists");
    }

    const int w1 = inst.boundary.verts[0], w2 = inst.boundary.verts[1];
    for (int h = 0; h < 2; ++h) {
        const auto& pc = inst.precolor[h];
        for (int j = 0; j < 3; ++j)
            require(pc[j] >= 1 && pc[j] <= 6, "precolor outside the six colors");
        require(pc[0] != pc[1] && pc[0] != pc[2] && pc[1] != pc[2],
                "precolor repeats a color at a seed vertex");
    }
    for (int j = 0; j < 3; ++j)
        require(inst.cover.map_color(w1, w2, inst.precolor[0][j]) !=
                    inst.precolor[1][j],
                "precolor is not proper along the first boundary edge");
}

Packing pack_near_triangulation(const NearTriInstance& inst, std::ostream* trace,
                                bool validate) {
    if (validate) validate_near_tri_instance(inst);
    const int n = inst.emb.g.n;
    Packing packing = Packing::make_empty(3, n);
    for (int h = 0; h < 2; ++h)
        for (int j = 0; j < 3; ++j)
            packing.set_color(j, inst.boundary.verts[h], inst.precolor[h][j]);

    ListSystem work = inst.lists;
    Engine engine(inst.cover, work, packing, trace);
    engine.run(inst.emb.rotations, inst.boundary.verts);

    ensure(packing.total(), "packing left a vertex uncolored");
    auto report = check_packing(inst.emb.g, inst.cover, packing, 3);
    ensure(report.ok(),
           "constructed packing failed verification: " + report.to_string());
    for (int v = 0; v < n; ++v) {
        if (v == inst.boundary.verts[0] || v == inst.boundary.verts[1]) continue;
        for (int j = 0; j < 3; ++j)
            ensure(inst.lists.at(j, v).contains(packing.color(j, v)),
                   "chosen color fell outside its list");
    }
    return packing;
}

namespace {

void insert_after(std::vector<int>& row, int after, int val) {
    auto it = std::find(row.begin(), row.end(), after);
    ensure(it != row.end(), "rotation insert anchor missing");
    row.insert(it + 1, val);
}

}  // namespace

TriangulationResult triangulate(const PlaneEmbedding& emb, int keep_face) {
    auto faces = trace_faces(emb);
    require(keep_face >= -1 && keep_face < static_cast<int>(faces.size()),
            "kept face index out of range");
    TriangulationResult res;
    res.emb = emb;
    std::vector<FaceWalk> work;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != keep_face) work.push_back(faces[i]);

    while (!work.empty()) {
        FaceWalk w = std::move(work.back());
        work.pop_back();
        const int k = static_cast<int>(w.size());
        if (k <= 3) continue;
        std::set<int> distinct(w.begin(), w.end());
        require(static_cast<int>(distinct.size()) == k,
                "face walk revisits a vertex; graph must be 2-connected");

        int ca = -1, cb = -1;
        for (int a = 0; a < k && ca < 0; ++a) {
            for (int b = a + 2; b < k; ++b) {
                if (a == 0 && b == k - 1) continue;
                if (!res.emb.g.has_edge(w[a], w[b])) {
                    ca = a;
                    cb = b;
                    break;
                }
            }
        }
        ensure(ca >= 0, "face admits no chord");
        const int u = w[ca], v = w[cb];
        insert_after(res.emb.rotations[u], w[(ca + k - 1) % k], v);
        insert_after(res.emb.rotations[v], w[(cb + k - 1) % k], u);
        auto& au = res.emb.g.adj[u];
        au.insert(std::upper_bound(au.begin(), au.end(), v), v);
        auto& av = res.emb.g.adj[v];
        av.insert(std::upper_bound(av.begin(), av.end(), u), u);
        res.added_edges.emplace_back(std::min(u, v), std::max(u, v));

        FaceWalk f1(w.begin() + ca, w.begin() + cb + 1);
        FaceWalk f2;
        for (int p = cb;; p = (p + 1) % k) {
            f2.push_back(w[p]);
            if (p == ca) break;
        }
        work.push_back(std::move(f1));
        work.push_back(std::move(f2));
    }

    if (keep_face >= 0) {
        auto traced = trace_faces(res.emb);
        res.emb.outer_face = -1;
        for (int i = 0; i < static_cast<int>(traced.size()); ++i) {
            if (same_cycle(traced[i], faces[keep_face])) {
                res.emb.outer_face = i;
                break;
            }
        }
        ensure(res.emb.outer_face >= 0, "kept face vanished while adding chords");
    } else {
        res.emb.outer_face = -1;
    }
    return res;
}

namespace {

struct SubEmbedding {
    PlaneEmbedding emb;
    std::vector<int> to_local;
    std::vector<int> to_global;
};

SubEmbedding induced_subembedding(const PlaneEmbedding& emb,
                                  const std::vector<int>& verts) {
    SubEmbedding out;
    out.to_local.assign(emb.g.n, -1);
    out.to_global = verts;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        out.to_local[verts[i]] = i;
    out.emb.g.n = static_cast<int>(verts.size());
    out.emb.g.adj.resize(verts.size());
    out.emb.rotations.resize(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        for (int w : emb.rotations[verts[i]])
            if (out.to_local[w] >= 0)
                out.emb.rotations[i].push_back(out.to_local[w]);
        out.emb.g.adj[i] = out.emb.rotations[i];
        std::sort(out.emb.g.adj[i].begin(), out.emb.g.adj[i].end());
    }
    out.emb.outer_face = -1;
    return out;
}

}  // namespace

Packing pack_planar(const PlaneEmbedding& emb, const Cover& cover,
                    const std::array<int, 3>& triangle,
                    const std::array<std::array<int, 3>, 3>& phi0,
                    std::ostream* trace) {
    const Graph& g = emb.g;
    require(g.n >= 3, "planar packing needs at least three vertices");
    require(cover.t() == 6, "planar packing uses a 6-cover");
    require(is_connected(g), "graph must be connected");
    for (auto [u, v] : g.edges())
        require(cover.has_matching(u, v),
                "cover is missing the matching of edge " + std::to_string(u) +
                    "," + std::to_string(v));
    for (int i = 0; i < 3; ++i) {
        require(triangle[i] >= 0 && triangle[i] < g.n,
                "triangle vertex out of range");
        require(g.has_edge(triangle[i], triangle[(i + 1) % 3]),
                "seed vertices do not form a triangle");
        const auto& pc = phi0[i];
        for (int j = 0; j < 3; ++j)
            require(pc[j] >= 1 && pc[j] <= 6, "seed color outside the six colors");
        require(pc[0] != pc[1] && pc[0] != pc[2] && pc[1] != pc[2],
                "seed coloring repeats a color at a vertex");
    }
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        for (int j = 0; j < 3; ++j)
            require(cover.map_color(triangle[a], triangle[b], phi0[a][j]) !=
                        phi0[b][j],
                    "seed coloring is not proper on the triangle");
    }

    Packing packing = Packing::make_empty(3, g.n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            packing.set_color(j, triangle[i], phi0[i][j]);
    if (g.n == 3) return packing;

    // Components of the graph with the triangle removed; more than one
    // means the triangle separates and each part is handled on its own.
    std::vector<char> blocked(g.n, 0), seen(g.n, 0);
    for (int v : triangle) blocked[v] = seen[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        std::vector<int> comp, todo = {v};
        seen[v] = 1;
        while (!todo.empty()) {
            int a = todo.back();
            todo.pop_back();
            comp.push_back(a);
            for (int b : g.adj[a])
                if (!seen[b] && !blocked[b]) {
                    seen[b] = 1;
                    todo.push_back(b);
                }
        }
        comps.push_back(std::move(comp));
    }

    if (comps.size() > 1) {
        for (const auto& comp : comps) {
            std::vector<int> verts(comp);
            verts.insert(verts.end(), triangle.begin(), triangle.end());
            std::sort(verts.begin(), verts.end());
            auto sub = induced_subembedding(emb, verts);
            Cover subcov(6);
            for (auto [lu, lv] : sub.emb.g.edges())
                subcov.set_matching(lu, lv,
                                    cover.matching(sub.to_global[lu],
                                                   sub.to_global[lv]));
            std::array<int, 3> ltri = {sub.to_local[triangle[0]],
                                       sub.to_local[triangle[1]],
                                       sub.to_local[triangle[2]]};
            Packing subpack = pack_planar(sub.emb, subcov, ltri, phi0, trace);
            for (int lv = 0; lv < sub.emb.g.n; ++lv) {
                int gv = sub.to_global[lv];
                for (int j = 0; j < 3; ++j) {
                    if (packing.colored(j, gv))
                        ensure(packing.color(j, gv) == subpack.color(j, lv),
                               "parts disagree on a shared vertex");
                    else
                        packing.set_color(j, gv, subpack.color(j, lv));
                }
            }
        }
        auto report = check_packing(g, cover, packing, 3);
        ensure(report.ok(),
               "assembled packing failed verification: " + report.to_string());
        return packing;
    }

    // The triangle bounds a face; make that face outer and fill in every
    // other face with chords carrying identity matchings.
    auto faces = trace_faces(emb);
    int cface = -1;
    std::vector<int> tri_cycle(triangle.begin(), triangle.end());
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (same_cycle(faces[i], tri_cycle)) {
            cface = i;
            break;
        }
    }
    ensure(cface >= 0, "non-separating triangle bounds no face");
    auto tr = triangulate(emb, cface);
    Cover cov2 = cover;
    for (auto [u, v] : tr.added_edges)
        cov2.set_matching(u, v, Perm::identity(6));

    FaceWalk cw = faces[cface];
    std::rotate(cw.begin(), std::min_element(cw.begin(), cw.end()), cw.end());
    const int w1 = cw[0], w2 = cw[1], w3 = cw[2];
    std::array<std::array<int, 3>, 3> pre{};
    for (int p = 0; p < 3; ++p) {
        for (int i = 0; i < 3; ++i)
            if (triangle[i] == cw[p]) pre[p] = phi0[i];
    }

    ListSystem lists = ListSystem::make(3, g.n, ColorSet::full(6));
    auto rot = tr.emb.rotations;
    const std::vector<int> nbrs = rot[w3];
    std::vector<int> fan = fan_between(nbrs, w1, w2);
    ensure(!fan.empty(), "deleted corner has no interior fan");
    for (int xv : fan) {
        // Withhold from each list the color matched with the corner's own
        // color and one of the three colors matched with nothing, paired
        // off in ascending order.
        std::array<int, 3> a;
        ColorSet taken;
        for (int j = 0; j < 3; ++j) {
            a[j] = cov2.map_color(w3, xv, pre[2][j]);
            taken.insert(a[j]);
        }
        ensure(taken.size() == 3, "corner colors collapsed through the matching");
        std::vector<int> d = ColorSet::full(6).minus(taken).to_vector();
        std::array<ColorSet, 3> pruned;
        for (int j = 0; j < 3; ++j) {
            ColorSet l = ColorSet::full(6);
            l.erase(a[j]);
            l.erase(d[j]);
            lists.at(j, xv) = l;
            pruned[j] = l;
        }
        ensure(has_paired_list_structure(pruned),
               "pruned lists lost their structure");
    }
    for (int w : nbrs) {
        auto& row = rot[w];
        auto it = std::find(row.begin(), row.end(), w3);
        ensure(it != row.end(), "rotation system lost symmetry");
        row.erase(it);
    }
    rot[w3].clear();

    Packing inner = Packing::make_empty(3, g.n);
    for (int j = 0; j < 3; ++j) {
        inner.set_color(j, w1, pre[0][j]);
        inner.set_color(j, w2, pre[1][j]);
    }
    std::vector<int> nbnd = {w1, w2};
    for (int m = static_cast<int>(fan.size()) - 1; m >= 0; --m)
        nbnd.push_back(fan[m]);

    Engine engine(cov2, lists, inner, trace);
    engine.run(std::move(rot), std::move(nbnd));
    for (int j = 0; j < 3; ++j) inner.set_color(j, w3, pre[2][j]);

    ensure(inner.total(), "packing left a vertex uncolored");
    auto report = check_packing(tr.emb.g, cov2, inner, 3);
    ensure(report.ok(),
           "constructed packing failed verification: " + report.to_string());
    return inner;
}

}  // namespace corrpack
