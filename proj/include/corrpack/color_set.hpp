#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "corrpack/error.hpp"

namespace corrpack {

/// Set of colors drawn from [t] with t <= 64, stored as a bit mask.
/// Colors are 1-based everywhere; bit c-1 represents color c.
class ColorSet {
public:
    constexpr ColorSet() = default;

    static ColorSet full(int t) {
        ensure(t >= 0 && t <= 64, "ColorSet supports at most 64 colors");
        ColorSet s;
        s.bits_ = (t == 64) ? ~0ULL : ((1ULL << t) - 1);
        return s;
    }

    static ColorSet of(std::initializer_list<int> colors) {
        ColorSet s;
        for (int c : colors) s.insert(c);
        return s;
    }

    bool contains(int c) const {
        return c >= 1 && c <= 64 && ((bits_ >> (c - 1)) & 1ULL);
    }

    void insert(int c) {
        ensure(c >= 1 && c <= 64, "color out of range");
        bits_ |= 1ULL << (c - 1);
    }

    void erase(int c) {
        if (c >= 1 && c <= 64) bits_ &= ~(1ULL << (c - 1));
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    /// Smallest color in the set, or 0 when empty.
    int least() const {
        return bits_ ? std::countr_zero(bits_) + 1 : 0;
    }

    ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
    ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
    ColorSet minus(ColorSet o) const { return from_bits(bits_ & ~o.bits_); }
    ColorSet& operator&=(ColorSet o) { bits_ &= o.bits_; return *this; }
    ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }

    bool operator==(const ColorSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::uint64_t raw() const { return bits_; }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (int c : to_vector()) {
            if (!first) os << ',';
            os << c;
            first = false;
        }
        os << '}';
        return os.str();
    }

private:
    static ColorSet from_bits(std::uint64_t b) {
        ColorSet s;
        s.bits_ = b;
        return s;
    }

    std::uint64_t bits_ = 0;
};

}  // namespace corrpack
