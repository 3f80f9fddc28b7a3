#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrpack/graph.hpp"

namespace corrpack {

/// A face walk as the cyclic sequence of vertices it visits; the directed
/// edges of the walk are (w[i], w[i+1 mod len]).
using FaceWalk = std::vector<int>;

/// Combinatorial plane embedding: a rotation (cyclic neighbor order) per
/// vertex plus the index of the designated outer face among the traced
/// faces.  Faces are traced with the fixed rule "after entering v from u,
/// leave toward the successor of u in v's rotation"; every algorithm here
/// is reflection-symmetric, so only consistency of that rule matters.
struct PlaneEmbedding {
    Graph g;
    std::vector<std::vector<int>> rotations;
    int outer_face = -1;
};

/// All face walks of the embedding, in deterministic order.  Rejects
/// rotations that disagree with the adjacency lists.  For a connected
/// plane graph the walks satisfy Euler's formula n - m + f = 2.
std::vector<FaceWalk> trace_faces(const PlaneEmbedding& emb);

/// Face tracing over bare rotation rows (empty rows are skipped).  Used by
/// the packing recursion, which masks vertices out of rotation copies.
std::vector<FaceWalk> trace_faces_from_rotations(
    const std::vector<std::vector<int>>& rotations);

/// Outer boundary of a near-triangulation, in walk order.
struct BoundaryCycle {
    std::vector<int> verts;
    int size() const { return static_cast<int>(verts.size()); }
};

/// Checks that every face other than the designated outer one is a
/// triangle and that the outer walk is a simple cycle, then returns that
/// cycle.  When a root edge (a, b) is given the cycle is rotated to start
/// a, b; if (a, b) only occurs reversed in the walk the cycle is flipped
/// first, which is the mirror embedding and equally valid.
BoundaryCycle validate_near_triangulation(
    const PlaneEmbedding& emb,
    std::optional<std::pair<int, int>> root_edge = std::nullopt);

/// Least (i, l) with 0 <= i < l < n, cyclically non-consecutive positions,
/// such that boundary vertices i and l are adjacent.  nullopt if chordless.
std::optional<std::pair<int, int>> find_chord(const BoundaryCycle& boundary,
                                              const Graph& g);

enum class FixtureKind { Wheel, DoubleWheel, StackedTriangulation, TriangulatedGrid };

FixtureKind fixture_kind_from_string(const std::string& name);

/// Deterministic embedded test graphs.
///  wheel:                 hub + rim cycle of length `size` (size >= 3)
///  double-wheel:          two hubs joined to a rim of length `size`
///  stacked-triangulation: `size` vertices grown by repeatedly splitting a
///                         random inner triangle (maximal planar)
///  triangulated-grid:     size x size grid with one diagonal per cell
/// The seed only affects the stacked kind.
PlaneEmbedding make_fixture(FixtureKind kind, int size, std::uint64_t seed);

/// True if `walk` equals `cycle` up to rotation and reflection.
bool same_cycle(const FaceWalk& walk, const std::vector<int>& cycle);

}  // namespace corrpack
