#include "corrpack/embedding.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "corrpack/error.hpp"
#include "corrpack/rng.hpp"

namespace corrpack {

namespace {

std::uint64_t dir_key(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

int rot_index(const std::vector<int>& rot, int u) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::vector<FaceWalk> trace_faces_from_rotations(
    const std::vector<std::vector<int>>& rotations) {
    const int n = static_cast<int>(rotations.size());
    // Successor lookup: next directed edge after (u -> v) is (v -> w) where
    // w follows u in the rotation at v.
    std::unordered_map<std::uint64_t, int> succ;
    for (int v = 0; v < n; ++v) {
        const auto& rot = rotations[v];
        const int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i)
            succ[dir_key(rot[i], v)] = rot[(i + 1) % d];
    }

    std::unordered_set<std::uint64_t> visited;
    std::vector<FaceWalk> faces;
    for (int u = 0; u < n; ++u) {
        for (int v : rotations[u]) {
            if (visited.count(dir_key(u, v))) continue;
            FaceWalk walk;
            int a = u, b = v;
            do {
                ensure(visited.insert(dir_key(a, b)).second,
                       "face tracing revisited a directed edge");
                walk.push_back(a);
                auto it = succ.find(dir_key(a, b));
                ensure(it != succ.end(), "rotation system is not symmetric");
                int c = it->second;
                a = b;
                b = c;
            } while (!(a == u && b == v));
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

std::vector<FaceWalk> trace_faces(const PlaneEmbedding& emb) {
    require(static_cast<int>(emb.rotations.size()) == emb.g.n,
            "rotation count must equal vertex count");
    for (int v = 0; v < emb.g.n; ++v) {
        std::vector<int> sorted = emb.rotations[v];
        std::sort(sorted.begin(), sorted.end());
        require(sorted == emb.g.adj[v],
                "rotation of vertex " + std::to_string(v) +
                    " does not list its neighbors exactly once");
    }
    return trace_faces_from_rotations(emb.rotations);
}

bool same_cycle(const FaceWalk& walk, const std::vector<int>& cycle) {
    const int n = static_cast<int>(walk.size());
    if (n != static_cast<int>(cycle.size())) return false;
    for (int dir = 0; dir < 2; ++dir) {
        for (int off = 0; off < n; ++off) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int j = dir == 0 ? (off + i) % n : (off - i % n + 2 * n) % n;
                ok = walk[j] == cycle[i];
            }
            if (ok) return true;
        }
    }
    return false;
}

BoundaryCycle validate_near_triangulation(
    const PlaneEmbedding& emb, std::optional<std::pair<int, int>> root_edge) {
    auto faces = trace_faces(emb);
    require(emb.outer_face >= 0 &&
                emb.outer_face < static_cast<int>(faces.size()),
            "designated outer face index is out of range");
    const int f = static_cast<int>(faces.size());
    require(emb.g.n - emb.g.edge_count() + f == 2,
            "embedding violates Euler's formula; graph must be connected "
            "and the rotation system planar");
    for (int i = 0; i < f; ++i) {
        if (i == emb.outer_face) continue;
        require(faces[i].size() == 3,
                "non-triangular inner face of length " +
                    std::to_string(faces[i].size()));
    }

    FaceWalk outer = faces[emb.outer_face];
    require(outer.size() >= 3, "outer boundary must have length >= 3");
    std::set<int> distinct(outer.begin(), outer.end());
    require(distinct.size() == outer.size(),
            "outer boundary is not a simple cycle");

    if (root_edge) {
        auto [a, b] = *root_edge;
        const int n = static_cast<int>(outer.size());
        int pa = -1;
        for (int i = 0; i < n; ++i)
            if (outer[i] == a) pa = i;
        require(pa >= 0, "root edge start is not on the boundary");
        if (outer[(pa + 1) % n] != b) {
            // Requested orientation is the mirror of the traced walk.
            std::reverse(outer.begin(), outer.end());
            pa = static_cast<int>(outer.size()) - 1 - pa;
            require(outer[(pa + 1) % n] == b,
                    "root edge is not a boundary edge");
        }
        std::rotate(outer.begin(), outer.begin() + pa, outer.end());
    }
    return BoundaryCycle{outer};
}

std::optional<std::pair<int, int>> find_chord(const BoundaryCycle& boundary,
                                              const Graph& g) {
    const int n = boundary.size();
    for (int i = 0; i + 2 < n; ++i) {
        for (int l = i + 2; l < n; ++l) {
            if (i == 0 && l == n - 1) continue;  // consecutive around the cycle
            if (g.has_edge(boundary.verts[i], boundary.verts[l]))
                return std::make_pair(i, l);
        }
    }
    return std::nullopt;
}

FixtureKind fixture_kind_from_string(const std::string& name) {
    if (name == "wheel") return FixtureKind::Wheel;
    if (name == "double-wheel") return FixtureKind::DoubleWheel;
    if (name == "stacked-triangulation") return FixtureKind::StackedTriangulation;
    if (name == "triangulated-grid") return FixtureKind::TriangulatedGrid;
    throw InputError("unknown fixture kind: " + name);
}

namespace {

// Locates the traced face matching `cycle` and stores its index.
void designate_outer(PlaneEmbedding& emb, const std::vector<int>& cycle) {
    auto faces = trace_faces(emb);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (same_cycle(faces[i], cycle)) {
            emb.outer_face = i;
            return;
        }
    }
    throw InvariantError("intended outer cycle is not a face");
}

PlaneEmbedding make_wheel(int size) {
    require(size >= 3, "wheel needs rim length >= 3");
    const int k = size;
    std::vector<std::pair<int, int>> e;
    std::vector<int> rim;
    for (int i = 1; i <= k; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % k + 1);
        rim.push_back(i);
    }
    PlaneEmbedding emb;
    emb.g = build_graph(k + 1, e);
    emb.rotations.assign(k + 1, {});
    emb.rotations[0] = rim;
    for (int i = 1; i <= k; ++i) {
        int next = i % k + 1;
        int prev = (i + k - 2) % k + 1;
        emb.rotations[i] = {next, 0, prev};
    }
    designate_outer(emb, rim);
    return emb;
}

PlaneEmbedding make_double_wheel(int size) {
    require(size >= 3, "double-wheel needs rim length >= 3");
    const int k = size;
    // 0 and 1 are the hubs; the rim is 2..k+1.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        int v = 2 + i;
        int next = 2 + (i + 1) % k;
        e.emplace_back(0, v);
        e.emplace_back(1, v);
        e.emplace_back(v, next);
    }
    PlaneEmbedding emb;
    emb.g = build_graph(k + 2, e);
    emb.rotations.assign(k + 2, {});
    for (int i = 0; i < k; ++i) emb.rotations[0].push_back(2 + i);
    for (int i = k - 1; i >= 0; --i) emb.rotations[1].push_back(2 + i);
    for (int i = 0; i < k; ++i) {
        int v = 2 + i;
        int next = 2 + (i + 1) % k;
        int prev = 2 + (i + k - 1) % k;
        emb.rotations[v] = {next, 0, prev, 1};
    }
    // Every face of this triangulation of the sphere is a triangle; the
    // first traced face serves as the outer one.
    emb.outer_face = 0;
    return emb;
}

PlaneEmbedding make_stacked(int size, std::uint64_t seed) {
    require(size >= 3, "stacked triangulation needs >= 3 vertices");
    PlaneEmbedding emb;
    emb.g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    emb.rotations = {{1, 2}, {2, 0}, {0, 1}};

    // Inner faces as vertex triples in walk order.  Start from whichever
    // traced triangle is not the designated outer one.
    std::vector<std::array<int, 3>> inner;
    {
        auto faces = trace_faces(emb);
        inner.push_back({faces[1][0], faces[1][1], faces[1][2]});
    }

    Rng rng(seed);
    while (emb.g.n < size) {
        int pick = static_cast<int>(rng.below(inner.size()));
        auto [a, b, c] = inner[pick];
        int v = emb.g.n;

        emb.g.n += 1;
        emb.g.adj.push_back({a, b, c});
        std::sort(emb.g.adj.back().begin(), emb.g.adj.back().end());
        for (int w : {a, b, c}) {
            emb.g.adj[w].insert(
                std::lower_bound(emb.g.adj[w].begin(), emb.g.adj[w].end(), v), v);
        }

        // Insert v into each corner's rotation between its two face
        // neighbors so the three new triangles trace correctly, and give v
        // the rotation (a, c, b).
        auto insert_between = [&](int corner, int before, int after) {
            auto& rot = emb.rotations[corner];
            int p = rot_index(rot, before);
            ensure(p >= 0, "stacked fixture rotation corrupted");
            ensure(rot[(p + 1) % rot.size()] == after,
                   "stacked fixture face walk disagrees with rotations");
            rot.insert(rot.begin() + p + 1, v);
        };
        insert_between(a, c, b);
        insert_between(b, a, c);
        insert_between(c, b, a);
        emb.rotations.push_back({a, c, b});

        inner[pick] = {a, b, v};
        inner.push_back({b, c, v});
        inner.push_back({c, a, v});
    }
    designate_outer(emb, {0, 1, 2});
    return emb;
}

PlaneEmbedding make_grid(int size) {
    require(size >= 2, "triangulated grid needs side length >= 2");
    const int k = size;
    auto id = [k](int r, int c) { return r * k + c; };
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            if (c + 1 < k) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < k) e.emplace_back(id(r, c), id(r + 1, c));
            if (r + 1 < k && c + 1 < k) e.emplace_back(id(r, c), id(r + 1, c + 1));
        }
    }
    PlaneEmbedding emb;
    emb.g = build_graph(k * k, e);
    emb.rotations.assign(k * k, {});
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            // Counterclockwise by drawing angle with rows going down:
            // right, up, up-left diagonal, left, down, down-right diagonal.
            std::vector<int> rot;
            if (c + 1 < k) rot.push_back(id(r, c + 1));
            if (r > 0) rot.push_back(id(r - 1, c));
            if (r > 0 && c > 0) rot.push_back(id(r - 1, c - 1));
            if (c > 0) rot.push_back(id(r, c - 1));
            if (r + 1 < k) rot.push_back(id(r + 1, c));
            if (r + 1 < k && c + 1 < k) rot.push_back(id(r + 1, c + 1));
            emb.rotations[id(r, c)] = rot;
        }
    }
    std::vector<int> boundary;
    for (int c = 0; c < k; ++c) boundary.push_back(id(0, c));
    for (int r = 1; r < k; ++r) boundary.push_back(id(r, k - 1));
    for (int c = k - 2; c >= 0; --c) boundary.push_back(id(k - 1, c));
    for (int r = k - 2; r >= 1; --r) boundary.push_back(id(r, 0));
    designate_outer(emb, boundary);
    return emb;
}

}  // namespace

PlaneEmbedding make_fixture(FixtureKind kind, int size, std::uint64_t seed) {
    switch (kind) {
        case FixtureKind::Wheel: return make_wheel(size);
        case FixtureKind::DoubleWheel: return make_double_wheel(size);
        case FixtureKind::StackedTriangulation: return make_stacked(size, seed);
        case FixtureKind::TriangulatedGrid: return make_grid(size);
    }
    throw InputError("unknown fixture kind");
}

}  // namespace corrpack
