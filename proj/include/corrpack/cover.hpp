#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "corrpack/color_set.hpp"
#include "corrpack/graph.hpp"

namespace corrpack {

/// Permutation of [t] with both directions precomputed.
/// one-line notation: fwd[a-1] = sigma(a), values 1-based.
struct Perm {
    std::vector<int> fwd, inv;

    static Perm identity(int t);
    static Perm from_one_line(const std::vector<int>& vals);

    int size() const { return static_cast<int>(fwd.size()); }
    int apply(int c) const { return fwd[c - 1]; }
    int apply_inv(int c) const { return inv[c - 1]; }
    ColorSet image(ColorSet s) const;
    ColorSet preimage(ColorSet s) const;

    bool operator==(const Perm&) const = default;
};

/// Correspondence cover: one perfect matching (a permutation of [t]) per
/// edge, stored under the key (min, max) and oriented min -> max.  Queries
/// take an explicit direction and invert as needed.
class Cover {
public:
    Cover() = default;
    explicit Cover(int t);

    int t() const { return t_; }
    int matching_count() const { return static_cast<int>(perms_.size()); }
    bool has_matching(int u, int v) const;

    /// Stores sigma oriented u -> v.  Re-setting an edge with a different
    /// matching is rejected; an identical duplicate is ignored.
    void set_matching(int u, int v, const Perm& sigma);

    /// Matching oriented min(u,v) -> max(u,v).
    const Perm& matching(int u, int v) const;

    /// Color at `to` matched with color c at `from`.
    int map_color(int from, int to, int c) const;
    ColorSet map_set(int from, int to, ColorSet s) const;

    /// Edge keys present, sorted lexicographically.
    std::vector<std::pair<int, int>> keys_sorted() const;

private:
    static std::uint64_t key(int u, int v);
    int t_ = 0;
    std::unordered_map<std::uint64_t, Perm> perms_;
};

/// Cover whose matchings may be given only on some color pairs.
/// pairs[(u,v)] lists (a, b) meaning color a at u is matched to b at v,
/// with u < v.
struct PartialCover {
    int t = 0;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pairs;
};

/// Extends a partial injection on [t] to a permutation: unmatched sources
/// in ascending order take the least unmatched target.  This completion
/// rule is shared by every loader and by the lower-bound witnesses.
std::vector<int> complete_partial_perm(int t,
                                       const std::vector<std::pair<int, int>>& pairs);

/// Completes every matching of a partial cover to a permutation.
Cover complete_cover(const PartialCover& pc);

/// Independent uniform random permutation per edge, drawn in sorted edge
/// order from a generator seeded with `seed`.
Cover random_cover(const Graph& g, int t, std::uint64_t seed);

/// s colorings of (a subset of) the vertices; color(j, v) == 0 means
/// vertex v is uncolored in coloring j.  Colors are 1-based.
struct Packing {
    int s = 0;
    std::vector<std::vector<int>> colorings;

    static Packing make_empty(int s, int n);
    int n() const { return s == 0 ? 0 : static_cast<int>(colorings[0].size()); }
    bool colored(int j, int v) const { return colorings[j][v] != 0; }
    int color(int j, int v) const { return colorings[j][v]; }
    void set_color(int j, int v, int c) { colorings[j][v] = c; }
    bool total() const;
};

/// Color lists indexed by (coloring j, vertex v).
struct ListSystem {
    int s = 0, n = 0;
    std::vector<ColorSet> data;

    static ListSystem make(int s, int n, ColorSet init);
    ColorSet& at(int j, int v) { return data[static_cast<std::size_t>(v) * s + j]; }
    const ColorSet& at(int j, int v) const {
        return data[static_cast<std::size_t>(v) * s + j];
    }
};

/// Residual lists at an uncolored vertex v: for each coloring j, the
/// colors of [t] not matched with the color of any already-colored
/// neighbor.  Each list has size >= t - deg(v).
std::vector<ColorSet> residual_lists(const Graph& g, const Cover& cover,
                                     const Packing& packing, int v);

struct Violation {
    enum class Kind { WrongCount, Uncolored, Properness, Disjointness };
    Kind kind;
    int u = -1, v = -1;  // edge for properness; v also used for vertex kinds
    int j = -1, k = -1;  // colorings involved
    std::string to_string() const;
};

struct CheckReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Validates a packing against the graph and cover alone: coloring count
/// (when required_s > 0), totality (when required_s > 0), properness of
/// every coloring on every edge, and pairwise disjointness at every
/// vertex.  Shares no state with the constructive algorithms.
CheckReport check_packing(const Graph& g, const Cover& cover,
                          const Packing& packing, int required_s);

}  // namespace corrpack
