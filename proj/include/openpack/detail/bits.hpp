#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace openpack::detail {

// Hard ceiling for the exhaustive enumeration routines. Raising EnumOptions
// caps past this value is rejected up front, so a fixed-width set suffices
// and the hot recursion never allocates.
inline constexpr int kMaxEnumVertices = 256;

// Fixed 256-bit vertex set used by the enumeration cores.
struct Bits {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }

    bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
               std::popcount(w[3]);
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (int k = 0; k < 4; ++k) {
            if (w[static_cast<std::size_t>(k)] != 0)
                return 64 * k + std::countr_zero(w[static_cast<std::size_t>(k)]);
        }
        return -1;
    }

    // {0, 1, ..., n-1}
    static Bits first_n(int n) {
        Bits b;
        int full = n >> 6;
        for (int k = 0; k < full; ++k) b.w[static_cast<std::size_t>(k)] = ~std::uint64_t{0};
        if (n & 63) b.w[static_cast<std::size_t>(full)] = (std::uint64_t{1} << (n & 63)) - 1;
        return b;
    }

    Bits operator&(const Bits& o) const {
        Bits r;
        for (int k = 0; k < 4; ++k)
            r.w[static_cast<std::size_t>(k)] =
                w[static_cast<std::size_t>(k)] & o.w[static_cast<std::size_t>(k)];
        return r;
    }

    Bits operator|(const Bits& o) const {
        Bits r;
        for (int k = 0; k < 4; ++k)
            r.w[static_cast<std::size_t>(k)] =
                w[static_cast<std::size_t>(k)] | o.w[static_cast<std::size_t>(k)];
        return r;
    }

    // this & ~o
    Bits andnot(const Bits& o) const {
        Bits r;
        for (int k = 0; k < 4; ++k)
            r.w[static_cast<std::size_t>(k)] =
                w[static_cast<std::size_t>(k)] & ~o.w[static_cast<std::size_t>(k)];
        return r;
    }

    bool intersects(const Bits& o) const {
        return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) != 0;
    }

    friend bool operator==(const Bits&, const Bits&) = default;

    // Visit set bits in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (int k = 0; k < 4; ++k) {
            std::uint64_t word = w[static_cast<std::size_t>(k)];
            while (word != 0) {
                int bit = std::countr_zero(word);
                f(64 * k + bit);
                word &= word - 1;
            }
        }
    }
};

}  // namespace openpack::detail
