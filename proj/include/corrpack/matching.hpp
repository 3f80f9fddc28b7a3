#pragma once

#include <optional>
#include <vector>

#include "corrpack/cover.hpp"
#include "corrpack/graph.hpp"

namespace corrpack {

/// Bipartite graph with left vertices 0..left-1 and right vertices 1..t
/// (right vertices are colors, hence 1-based).
struct BipartiteInstance {
    int left = 0;
    int t = 0;
    std::vector<ColorSet> allowed;  // per left vertex
};

/// Maximum matching by augmenting paths.  Left vertices are scanned in
/// ascending order and colors in ascending order, so the result is
/// deterministic.  Returns the matched color per left vertex (0 = none).
std::vector<int> max_bipartite_matching(const BipartiteInstance& inst);

/// System of distinct representatives: one color per list, all distinct.
/// nullopt when the lists admit none.
std::optional<std::vector<int>> find_distinct_representatives(
    const std::vector<ColorSet>& lists, int t);

/// Colors vertex v in every coloring of the packing at once, choosing
/// distinct colors from the residual lists.  Always succeeds when the
/// colored neighborhood of v has size at most t/2 and s <= t; may succeed
/// beyond that.  Returns false (leaving the packing untouched) otherwise.
bool extend_vertex(const Graph& g, const Cover& cover, Packing& packing, int v);

}  // namespace corrpack
