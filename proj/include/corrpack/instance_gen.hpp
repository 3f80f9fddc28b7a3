#pragma once

#include <cstdint>

#include "corrpack/compose.hpp"
#include "corrpack/embedding.hpp"
#include "corrpack/planar.hpp"
#include "corrpack/rng.hpp"

namespace corrpack {

/// Wraps an embedded near-triangulation into a packing instance: random
/// 6-cover, paired 4-lists on the boundary from position 3 on, full lists
/// inside, and a random disjoint proper seed pair on the first two
/// boundary vertices.
NearTriInstance dress_near_triangulation(PlaneEmbedding emb, std::uint64_t seed);

/// Dressed instance over a deterministic fixture graph.
NearTriInstance make_fixture_instance(FixtureKind kind, int size,
                                      std::uint64_t seed);

/// Random instance drawn over the fixture families, at most 200 vertices.
NearTriInstance make_key_instance(std::uint64_t seed);

/// Three disjoint colorings of the triangle a, b, c that are proper under
/// the cover on all three edges, drawn uniformly column by column.
/// Rows follow the vertex order a, b, c.
std::array<std::array<int, 3>, 3> random_triangle_precolor(const Cover& cover,
                                                           int a, int b, int c,
                                                           Rng& rng);

/// Clique-sum packing instance: the tree, the graph the cover speaks
/// about (the composition minus some deleted glue edges) and a 6-cover.
struct TreeInstance {
    CliqueSumTree tree;
    Graph declared;
    Cover cover;
};

/// Random left-deep clique-sum instance: one to eight leaves mixing
/// maximalized planar fixtures of at most 100 vertices with Wagner
/// leaves, glue cliques sampled from both sides with the clique size
/// degraded to what a triangle-free side offers, roughly a fifth of the
/// glue edges deleted from the declared graph, and a random 6-cover on
/// the declared edges.
TreeInstance make_tree_instance(std::uint64_t seed);

}  // namespace corrpack
