#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace ic {

inline constexpr int kMaxVertices = 128;

/// Fixed-width bit row over vertex ids 0..127 (two machine words).
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    /// The set {0, ..., n-1}.
    static constexpr VertexSet prefix(int n) {
        VertexSet s;
        if (n >= 64) {
            s.w_[0] = ~std::uint64_t{0};
            s.w_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
        } else if (n > 0) {
            s.w_[0] = (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    /// Vertices with id strictly greater than v.
    static constexpr VertexSet above(int v) { return prefix(kMaxVertices) - prefix(v + 1); }

    template <class Range>
    static VertexSet of(const Range& ids) {
        VertexSet s;
        for (int v : ids) s.insert(v);
        return s;
    }

    constexpr bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
    constexpr void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }

    /// Lowest member, or -1 when empty.
    constexpr int first() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    /// Highest member, or -1 when empty.
    constexpr int last() const {
        if (w_[1]) return 127 - std::countl_zero(w_[1]);
        if (w_[0]) return 63 - std::countl_zero(w_[0]);
        return -1;
    }

    constexpr bool is_subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    constexpr bool intersects(const VertexSet& o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }

    constexpr VertexSet& operator|=(const VertexSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    constexpr VertexSet& operator&=(const VertexSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    constexpr VertexSet& operator-=(const VertexSet& o) {
        w_[0] &= ~o.w_[0];
        w_[1] &= ~o.w_[1];
        return *this;
    }
    constexpr VertexSet& operator^=(const VertexSet& o) {
        w_[0] ^= o.w_[0];
        w_[1] ^= o.w_[1];
        return *this;
    }

    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
    /// Orders by the highest differing bit, i.e. as 128-bit integers.
    friend constexpr auto operator<=>(const VertexSet& a, const VertexSet& b) {
        if (a.w_[1] != b.w_[1]) return a.w_[1] <=> b.w_[1];
        return a.w_[0] <=> b.w_[0];
    }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (int k = 0; k < 2; ++k) {
            std::uint64_t word = w_[k];
            while (word) {
                int bit = std::countr_zero(word);
                word &= word - 1;
                f(k * 64 + bit);
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    constexpr std::uint64_t word(int k) const { return w_[k]; }

private:
    std::array<std::uint64_t, 2> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
        h ^= s.word(1) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace ic
