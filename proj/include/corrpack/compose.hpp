#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "corrpack/cover.hpp"
#include "corrpack/embedding.hpp"
#include "corrpack/graph.hpp"

namespace corrpack {

/// Leaf of a clique-sum tree: an embedded planar graph or the Wagner
/// graph.  Both kinds keep their graph in emb.g; Wagner pieces carry no
/// rotations, planar pieces must be embedded (and, above 3 vertices,
/// 2-connected so they can be triangulated).
struct Piece {
    enum class Kind { Planar, M8 };
    Kind kind = Kind::Planar;
    PlaneEmbedding emb;
};

Piece make_planar_piece(PlaneEmbedding emb);
Piece make_m8_piece();

/// One clique-sum step.  The first join names the base piece in `left`;
/// every later join has left == kAcc and attaches `right` to the graph
/// accumulated so far.  `identify` lists r pairs (accumulated vertex id,
/// right-piece local id) whose two sides are each required to form a
/// clique of size r.
struct Join {
    static constexpr int kAcc = -1;
    int left = kAcc;
    int right = -1;
    int r = 0;
    std::vector<std::pair<int, int>> identify;
};

/// Left-deep sequence of 1-, 2- and 3-sums over the pieces.  A single
/// piece with no joins is allowed; otherwise every piece appears exactly
/// once as the base or as a join's right side.
struct CliqueSumTree {
    std::vector<Piece> pieces;
    std::vector<Join> joins;
};

/// The graph obtained by performing all sums.  Vertices of the base piece
/// keep their ids; each join appends the non-identified vertices of its
/// right piece in ascending local order.
struct ComposedGraph {
    Graph g;
    std::vector<std::vector<int>> piece_to_global;  // [piece][local] -> global
    std::vector<std::pair<int, int>> glue_edges;    // edges inside glue cliques
};

/// Validates every tree invariant (piece shapes, left-deep join order,
/// clique identifications on both sides) and builds the composition.
ComposedGraph build_composed_graph(const CliqueSumTree& tree);

/// Packs the Wagner graph under a cover with t >= 6 by coloring the
/// uncolored vertices in ascending id order with extend_vertex; every
/// vertex has degree 3 <= t/2, so each step succeeds.  The precolored
/// vertices, if any, must be a single vertex or an edge, colored properly
/// and disjointly.  An empty precolor (s == 0) starts from scratch.
Packing pack_m8(const Graph& g, const Cover& cover, int s,
                Packing precolor = Packing{});

/// Colors the least-id common neighbor of the colored adjacent pair a, b
/// in all colorings at once and returns it.  The pair lies in a triangle
/// whenever the graph is maximal planar on at least 3 vertices.
int extend_clique_precoloring(const Graph& g, const Cover& cover,
                              Packing& packing, int a, int b);

/// Three disjoint cover colorings of the composed graph of the tree.
/// `declared` is the edge set the caller's cover speaks about: it must be
/// a subgraph of the composition missing at most glue-clique edges, and
/// the cover must provide a matching (t = 6) for each declared edge.
/// Missing glue matchings are taken as identity while packing, which only
/// strengthens the result.  The packing is checked against both the full
/// composition and the declared graph before being returned.
Packing pack_clique_sum(const CliqueSumTree& tree, const Graph& declared,
                        const Cover& cover, std::ostream* trace = nullptr);

}  // namespace corrpack
