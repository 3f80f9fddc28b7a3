#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corrpack/cover.hpp"
#include "corrpack/graph.hpp"

namespace corrpack {

/// Node allowance for the exhaustive searches; every tried color, tuple
/// or cover costs one node.  An infeasible search throws BudgetError up
/// front when its worst case already exceeds the allowance, and again the
/// moment the allowance is actually consumed.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
};

/// Every total proper coloring under the cover, ordered lexicographically
/// by the color sequence (vertex 0 varies slowest).
std::vector<std::vector<int>> enumerate_colorings(const Graph& g,
                                                  const Cover& cover,
                                                  Budget budget = {});

/// Lexicographically first s-packing, or nullopt when none exists.
/// Vertices in id order each pick an ordered s-tuple of distinct colors,
/// tuples tried in lexicographic order with properness pruning.
std::optional<Packing> find_packing_exhaustive(const Graph& g,
                                               const Cover& cover, int s,
                                               Budget budget = {});

/// First t-cover of g that admits no s-packing, or nullopt when every
/// cover does.  Covers are enumerated odometer-style over per-edge
/// permutation ranks with edges sorted and the last edge turning fastest,
/// so the returned witness is rank-minimal.
std::optional<Cover> search_bad_cover(const Graph& g, int t, int s,
                                      Budget budget = {});

/// A proper coloring disjoint from phi1 for a 3-degenerate graph under a
/// 5-cover, built greedily in reverse degeneracy order with the least
/// eligible color.  Each step faces at most three neighbor constraints
/// plus one disjointness constraint, so some color always remains.
std::vector<int> second_coloring_greedy(const Graph& g, const Cover& cover,
                                        const std::vector<int>& phi1);

}  // namespace corrpack
