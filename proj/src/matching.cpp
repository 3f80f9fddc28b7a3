#include "corrpack/matching.hpp"

#include "corrpack/error.hpp"

namespace corrpack {

namespace {

bool augment(const BipartiteInstance& inst, int j, std::vector<int>& left_match,
             std::vector<int>& right_match, std::vector<char>& seen) {
    for (int c : inst.allowed[j].to_vector()) {
        if (seen[c]) continue;
        seen[c] = 1;
        if (right_match[c] == -1 ||
            augment(inst, right_match[c], left_match, right_match, seen)) {
            left_match[j] = c;
            right_match[c] = j;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<int> max_bipartite_matching(const BipartiteInstance& inst) {
    ensure(inst.t >= 0 && inst.t <= 64, "color side must fit in 64");
    std::vector<int> left_match(inst.left, 0);
    std::vector<int> right_match(inst.t + 1, -1);
    for (int j = 0; j < inst.left; ++j) {
        std::vector<char> seen(inst.t + 1, 0);
        if (!augment(inst, j, left_match, right_match, seen)) left_match[j] = 0;
    }
    return left_match;
}

std::optional<std::vector<int>> find_distinct_representatives(
    const std::vector<ColorSet>& lists, int t) {
    BipartiteInstance inst{static_cast<int>(lists.size()), t, lists};
    std::vector<int> match = max_bipartite_matching(inst);
    for (int c : match)
        if (c == 0) return std::nullopt;
    return match;
}

bool extend_vertex(const Graph& g, const Cover& cover, Packing& packing, int v) {
    auto lists = residual_lists(g, cover, packing, v);
    auto rep = find_distinct_representatives(lists, cover.t());
    if (!rep) return false;
    for (int j = 0; j < packing.s; ++j) packing.set_color(j, v, (*rep)[j]);
    return true;
}

}  // namespace corrpack
