#include "corrpack/lowerbound.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include "corrpack/error.hpp"

namespace corrpack {

namespace {

constexpr std::uint64_t kFactorial[21] = {1ULL,
                                          1ULL,
                                          2ULL,
                                          6ULL,
                                          24ULL,
                                          120ULL,
                                          720ULL,
                                          5040ULL,
                                          40320ULL,
                                          362880ULL,
                                          3628800ULL,
                                          39916800ULL,
                                          479001600ULL,
                                          6227020800ULL,
                                          87178291200ULL,
                                          1307674368000ULL,
                                          20922789888000ULL,
                                          355687428096000ULL,
                                          6402373705728000ULL,
                                          121645100408832000ULL,
                                          2432902008176640000ULL};

constexpr int kParts = 120 * 120 * 120;

/// The 60 ordered triples of distinct colors from [5], lexicographic.
const std::vector<std::array<int, 3>>& ordered_triples() {
    static const std::vector<std::array<int, 3>> table = [] {
        std::vector<std::array<int, 3>> v;
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b)
                for (int c = 1; c <= 5; ++c)
                    if (a != b && a != c && b != c) v.push_back({a, b, c});
        return v;
    }();
    return table;
}

}  // namespace

std::uint64_t perm_rank(const Perm& p) {
    const int t = p.size();
    require(t >= 1 && t <= 20, "permutation ranks support 1 <= t <= 20");
    std::uint64_t rank = 0;
    for (int i = 0; i < t; ++i) {
        int smaller_later = 0;
        for (int k = i + 1; k < t; ++k)
            if (p.fwd[k] < p.fwd[i]) ++smaller_later;
        rank += static_cast<std::uint64_t>(smaller_later) * kFactorial[t - 1 - i];
    }
    return rank;
}

Perm perm_unrank(std::uint64_t rank, int t) {
    require(t >= 1 && t <= 20, "permutation ranks support 1 <= t <= 20");
    require(rank < kFactorial[t], "rank out of range");
    std::vector<int> avail(t);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> out;
    out.reserve(t);
    for (int i = t - 1; i >= 0; --i) {
        const std::uint64_t f = kFactorial[i];
        const auto d = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Perm::from_one_line(out);
}

int k3t_u_index(int a, int b, int c) {
    require(a >= 0 && a < 120 && b >= 0 && b < 120 && c >= 0 && c < 120,
            "matching index out of range");
    return 3 + (a * 120 + b) * 120 + c;
}

std::array<int, 3> k3t_u_triple(int u) {
    require(u >= 3 && u < 3 + kParts, "vertex is not in U");
    int i = u - 3;
    return {i / (120 * 120), (i / 120) % 120, i % 120};
}

Perm k3t_matching(int w, int u) {
    require(w >= 0 && w < 3, "W-vertex must be 0, 1 or 2");
    return perm_unrank(static_cast<std::uint64_t>(k3t_u_triple(u)[w]), 5);
}

WitnessInfo refute_candidate(const WAssignment& phi_w) {
    for (const auto& col : phi_w) {
        for (int c : col) require(c >= 1 && c <= 5, "colors live in [5]");
        require(col[0] != col[1] && col[0] != col[2] && col[1] != col[2],
                "W-assignment must be disjoint at each vertex");
    }
    // Coloring j lands on coordinate j at x, shifted cyclically at y and z,
    // so together x, y, z forbid coordinates 1, 2 and 3 in every coloring.
    static constexpr int kCoord[3][3] = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}};

    WitnessInfo out;
    std::array<Perm, 3> completed;
    for (int w = 0; w < 3; ++w) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < 3; ++j) pairs.emplace_back(phi_w[w][j], kCoord[w][j]);
        completed[w] = Perm::from_one_line(complete_partial_perm(5, pairs));
        out.matching_ranks[w] = perm_rank(completed[w]);
    }
    out.u = k3t_u_index(static_cast<int>(out.matching_ranks[0]),
                        static_cast<int>(out.matching_ranks[1]),
                        static_cast<int>(out.matching_ranks[2]));
    for (int j = 0; j < 3; ++j) {
        ColorSet res = ColorSet::full(5);
        for (int w = 0; w < 3; ++w) res.erase(completed[w].apply(phi_w[w][j]));
        out.residual[j] = res;
    }
    return out;
}

std::uint64_t candidate_count() {
    const auto n = ordered_triples().size();
    return static_cast<std::uint64_t>(n * n * n);
}

WAssignment candidate_by_rank(std::uint64_t rank) {
    require(rank < candidate_count(), "candidate rank out of range");
    const auto& triples = ordered_triples();
    const auto n = static_cast<std::uint64_t>(triples.size());
    WAssignment phi_w;
    phi_w[0] = triples[static_cast<std::size_t>(rank / (n * n))];
    phi_w[1] = triples[static_cast<std::size_t>((rank / n) % n)];
    phi_w[2] = triples[static_cast<std::size_t>(rank % n)];
    return phi_w;
}

RefutationCertificate verify_nonpackable(int jobs, int sample_count) {
    require(jobs >= 1, "need at least one worker");
    require(sample_count >= 0, "sample count cannot be negative");
    const std::uint64_t total = candidate_count();

    std::vector<std::uint64_t> sample_ranks;
    for (int i = 0; i < sample_count; ++i)
        sample_ranks.push_back(sample_count == 1
                                   ? 0
                                   : (total - 1) * static_cast<std::uint64_t>(i) /
                                         static_cast<std::uint64_t>(sample_count - 1));
    sample_ranks.erase(std::unique(sample_ranks.begin(), sample_ranks.end()),
                       sample_ranks.end());

    struct Slot {
        std::uint64_t checked = 0;
        std::uint64_t refuted = 0;
        std::optional<std::uint64_t> first_unrefuted;
        std::vector<std::pair<std::uint64_t, WitnessInfo>> samples;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(jobs));

    auto work = [&](int w) {
        Slot& slot = slots[static_cast<std::size_t>(w)];
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) /
                                 static_cast<std::uint64_t>(jobs);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) /
                                 static_cast<std::uint64_t>(jobs);
        try {
            for (std::uint64_t r = lo; r < hi; ++r) {
                WitnessInfo wit = refute_candidate(candidate_by_rank(r));
                ColorSet joint;
                bool exact = true;
                for (const ColorSet& res : wit.residual) {
                    joint |= res;
                    exact = exact && res == ColorSet::of({4, 5});
                }
                if (joint.size() >= 3) {
                    if (!slot.first_unrefuted) slot.first_unrefuted = r;
                } else {
                    ensure(exact, "witness residual lists must be exactly {4,5}");
                    ++slot.refuted;
                }
                ++slot.checked;
                if (std::binary_search(sample_ranks.begin(), sample_ranks.end(), r))
                    slot.samples.emplace_back(r, wit);
            }
        } catch (...) {
            slot.error = std::current_exception();
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    RefutationCertificate cert;
    for (const Slot& slot : slots) {
        if (slot.error) std::rethrow_exception(slot.error);
        cert.candidates_checked += slot.checked;
        cert.candidates_refuted += slot.refuted;
        if (slot.first_unrefuted &&
            (!cert.first_unrefuted || *slot.first_unrefuted < *cert.first_unrefuted))
            cert.first_unrefuted = slot.first_unrefuted;
        cert.samples.insert(cert.samples.end(), slot.samples.begin(),
                            slot.samples.end());
    }
    cert.all_refuted = !cert.first_unrefuted.has_value() &&
                       cert.candidates_refuted == cert.candidates_checked;
    return cert;
}

std::vector<ColorSet> general_refute(int s,
                                     const std::vector<std::vector<int>>& phi_w) {
    require(s >= 4, "the construction starts at s = 4");
    const int t = 2 * s - 5;
    require(t <= 64, "color sets support at most 64 colors");
    const int w_count = s - 2;
    require(static_cast<int>(phi_w.size()) == w_count,
            "need colors on exactly s-2 W-vertices");
    for (const auto& col : phi_w) {
        require(static_cast<int>(col.size()) == w_count,
                "need s-2 colorings per W-vertex");
        for (int c : col) require(c >= 1 && c <= t, "color out of range");
        for (std::size_t i = 0; i < col.size(); ++i)
            for (std::size_t k = i + 1; k < col.size(); ++k)
                require(col[i] != col[k], "W-assignment must be disjoint");
    }

    std::vector<Perm> completed;
    for (int k = 0; k < w_count; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < w_count; ++j) {
            const int coord = ((j - k) % w_count + w_count) % w_count + 1;
            pairs.emplace_back(phi_w[k][j], coord);
        }
        completed.push_back(Perm::from_one_line(complete_partial_perm(t, pairs)));
    }

    ColorSet top = ColorSet::full(t).minus(ColorSet::full(w_count));
    std::vector<ColorSet> residual;
    for (int j = 0; j < w_count; ++j) {
        ColorSet res = ColorSet::full(t);
        for (int k = 0; k < w_count; ++k) res.erase(completed[k].apply(phi_w[k][j]));
        ensure(res == top, "residual list must be exactly the top s-3 colors");
        residual.push_back(res);
    }
    return residual;
}

}  // namespace corrpack
