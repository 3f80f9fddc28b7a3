#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "corrpack/color_set.hpp"
#include "corrpack/cover.hpp"

namespace corrpack {

/// Rank of a permutation of [t] in lexicographic one-line order, t <= 20.
std::uint64_t perm_rank(const Perm& p);

/// Permutation of [t] with the given lexicographic rank.
Perm perm_unrank(std::uint64_t rank, int t);

/// The hard 5-cover instance lives on K_{3,120^3} with W = {0,1,2} (named
/// x, y, z) and U = {3, ..., 120^3 + 2}.  The U-vertex with index triple
/// (a, b, c) carries the rank-a matching to x, rank-b to y, rank-c to z,
/// each oriented from the W side.  The cover is never materialized.
int k3t_u_index(int a, int b, int c);
std::array<int, 3> k3t_u_triple(int u);
Perm k3t_matching(int w, int u);

/// colors[w][j]: color of coloring j+1 at W-vertex w (0 = x, 1 = y, 2 = z).
using WAssignment = std::array<std::array<int, 3>, 3>;

struct WitnessInfo {
    int u = -1;
    std::array<std::uint64_t, 3> matching_ranks{};
    std::array<ColorSet, 3> residual;
};

/// The U-vertex that defeats the W-assignment: its three matchings send
/// coloring j's colors at x, y, z onto all of coordinates {1,2,3}, so the
/// residual list of every coloring at u is inside {4,5} and three
/// pairwise distinct choices cannot exist.  The partial matchings pin
/// (phi_j(x), j), (phi_j(y), shifted), (phi_j(z), shifted twice) and are
/// completed to permutations by the shared greedy rule.
WitnessInfo refute_candidate(const WAssignment& phi_w);

/// Candidates enumerate the (5*4*3)^3 ordered disjoint W-assignments;
/// per-vertex triples are ranked lexicographically, z varies fastest.
std::uint64_t candidate_count();
WAssignment candidate_by_rank(std::uint64_t rank);

struct RefutationCertificate {
    std::uint64_t candidates_checked = 0;
    std::uint64_t candidates_refuted = 0;
    bool all_refuted = false;
    std::optional<std::uint64_t> first_unrefuted;
    std::vector<std::pair<std::uint64_t, WitnessInfo>> samples;  // by rank
};

/// Refutes every candidate.  The work splits into `jobs` contiguous rank
/// ranges with a pure worker each; counts, flags and the fixed sample
/// ranks make the aggregate independent of the schedule.  Residual lists
/// are asserted to be exactly {4,5} along the way.
RefutationCertificate verify_nonpackable(int jobs = 1, int sample_count = 3);

/// Generalized construction on t = 2s-5 colors: W has s-2 vertices and
/// coloring j at W-vertex k (0-based) is matched into coordinate
/// ((j-k-1) mod (s-2)) + 1 of the virtual far vertex, 1-based in j.
/// Returns the s-2 residual lists there, each exactly the top s-3 colors,
/// too few for s-2 pairwise distinct choices.
std::vector<ColorSet> general_refute(int s,
                                     const std::vector<std::vector<int>>& phi_w);

}  // namespace corrpack
