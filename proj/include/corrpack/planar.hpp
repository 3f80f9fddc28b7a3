#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "corrpack/cover.hpp"
#include "corrpack/embedding.hpp"

namespace corrpack {

/// Ordered partition of [6] into three pairs, one reserved per coloring.
struct ReservedPartition {
    std::array<ColorSet, 3> parts;
    bool operator==(const ReservedPartition&) const = default;
    std::string to_string() const;
};

/// Lists with the boundary structure used throughout the 6-cover packing:
/// distinct c_1..c_6 with L_1 = {c1,c2,c3,c4}, L_2 = {c1,c2,c5,c6},
/// L_3 = {c3,c4,c5,c6}.  Equivalent test: sizes 4, pairwise intersections
/// of size 2, empty triple intersection.
bool has_paired_list_structure(const std::array<ColorSet, 3>& lists);

/// Replaces any forbidden color that lies outside its list by the least
/// list element distinct from the other two forbidden colors.  Keeps the
/// triple distinct whenever the input triple was distinct, which is what
/// the partition existence argument needs.
std::array<int, 3> normalize_forbidden(const std::array<ColorSet, 3>& lists,
                                       std::array<int, 3> forbidden);

/// All ordered pair-partitions R_1, R_2, R_3 of [6] with R_j inside
/// lists[j] and forbidden[j] outside R_j, in lexicographic order.
std::vector<ReservedPartition> reserved_partition_all(
    const std::array<ColorSet, 3>& lists, std::array<int, 3> forbidden);

/// Lexicographically least valid reserved partition.  Existence is
/// guaranteed for paired lists and a distinct (normalized) forbidden
/// triple; absence therefore signals a violated precondition and throws.
ReservedPartition reserved_partition_search(const std::array<ColorSet, 3>& lists,
                                            std::array<int, 3> forbidden);

/// Closed-form lookup: renames the lists onto the canonical
/// ({1,2,3,4},{1,2,5,6},{3,4,5,6}), lands the forbidden triple on one of
/// eight tabulated triples with a pair swap, and transports the tabulated
/// partition back through the inverse renamings.  Output always satisfies
/// the same conditions as the search result.
ReservedPartition reserved_partition_table(const std::array<ColorSet, 3>& lists,
                                           std::array<int, 3> forbidden);

/// Packing instance on a near-triangulation: 6-cover, outer boundary
/// w_1..w_n, three lists per vertex (interior lists all of [6], boundary
/// lists from position 3 on with the paired structure), and three disjoint
/// precolors on w_1 and w_2 that are proper along the edge w_1 w_2.
struct NearTriInstance {
    PlaneEmbedding emb;
    Cover cover;
    BoundaryCycle boundary;
    ListSystem lists;                          // s = 3
    std::array<std::array<int, 3>, 2> precolor;  // [h][j]: coloring j+1 at w_{h+1}
};

/// Throws InputError when any instance condition fails.
void validate_near_tri_instance(const NearTriInstance& inst);

/// Three pairwise disjoint cover colorings extending the precolor, with
/// every color drawn from the vertex's list.  Runs the boundary induction
/// (base triangle / boundary chord split / last-vertex deletion with a
/// reserved partition) on an explicit work stack.
Packing pack_near_triangulation(const NearTriInstance& inst,
                                std::ostream* trace = nullptr,
                                bool validate = true);

struct TriangulationResult {
    PlaneEmbedding emb;
    std::vector<std::pair<int, int>> added_edges;
};

/// Adds chords until every face is a triangle, except the face with index
/// `keep_face` which is left untouched (-1 keeps none, producing a maximal
/// planar graph).  Requires every processed face walk to be a simple
/// cycle, which holds exactly for 2-connected plane graphs.
TriangulationResult triangulate(const PlaneEmbedding& emb, int keep_face);

/// Three pairwise disjoint colorings of any embedded planar graph under a
/// 6-cover, extending three given disjoint colorings phi0 of a triangle C.
/// Splits at separating triangles, then re-designates C's face as the
/// outer face, triangulates (extending the cover by identity matchings on
/// added edges), deletes the third triangle vertex and hands the rest to
/// pack_near_triangulation.  phi0[i][j] is coloring j+1 at triangle[i].
Packing pack_planar(const PlaneEmbedding& emb, const Cover& cover,
                    const std::array<int, 3>& triangle,
                    const std::array<std::array<int, 3>, 3>& phi0,
                    std::ostream* trace = nullptr);

}  // namespace corrpack
