#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "corrpack/error.hpp"

namespace corrpack {

/// Deterministic random source.  mt19937_64 has a standard-mandated output
/// sequence and the bounded draw below uses rejection sampling, so results
/// are identical across platforms and library versions.  Everything random
/// in this project flows through one of these, seeded explicitly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        ensure(n > 0, "Rng::below needs n > 0");
        // Reject into the largest multiple of n to avoid modulo bias.
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform draw from [lo, hi], inclusive.
    int range_int(int lo, int hi) {
        ensure(lo <= hi, "Rng::range_int needs lo <= hi");
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(double p) {
        // 53-bit mantissa draw; good enough for test mixing decisions.
        return static_cast<double>(gen_() >> 11) / 9007199254740992.0 < p;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    /// One-line notation of a uniform random permutation of [t], 1-based.
    std::vector<int> permutation(int t) {
        std::vector<int> p(t);
        for (int i = 0; i < t; ++i) p[i] = i + 1;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace corrpack
