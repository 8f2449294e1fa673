#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "kklab/errors.hpp"

namespace kklab {

// Ground-set elements are indices 0..n-1; a subset is a bitmask, so n <= 63.
inline constexpr int max_ground_size = 63;

struct GroundSet {
    int n = 0;

    explicit GroundSet(int n_) : n(n_) {
        if (n < 1) fail(errc::empty_ground, "ground set must have n >= 1");
        if (n > max_ground_size) fail(errc::edge_out_of_range, "ground set exceeds bitmask width");
    }

    std::uint64_t full_mask() const {
        return (n == 64) ? ~0ull : ((1ull << n) - 1);
    }

    bool operator==(const GroundSet&) const = default;
};

struct Subset {
    std::uint64_t bits = 0;

    Subset() = default;
    explicit Subset(std::uint64_t b) : bits(b) {}

    static Subset of(std::initializer_list<int> elems) {
        Subset s;
        for (int e : elems) s.bits |= (1ull << e);
        return s;
    }

    static Subset from_elements(const std::vector<int>& elems) {
        Subset s;
        for (int e : elems) {
            if (e < 0 || e >= 64) fail(errc::edge_out_of_range, "element out of bitmask range");
            s.bits |= (1ull << e);
        }
        return s;
    }

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int e) const { return (bits >> e) & 1; }
    bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    bool intersects(Subset o) const { return (bits & o.bits) != 0; }

    Subset unite(Subset o) const { return Subset(bits | o.bits); }
    Subset intersect(Subset o) const { return Subset(bits & o.bits); }
    Subset minus(Subset o) const { return Subset(bits & ~o.bits); }

    void add(int e) { bits |= (1ull << e); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits; b;) {
            int e = std::countr_zero(b);
            out.push_back(e);
            b &= b - 1;
        }
        return out;
    }

    bool operator==(const Subset&) const = default;
};

// Canonical order: by size, then lexicographic on the ascending element list.
// For equal sizes the lexicographic winner is the set owning the smallest
// element where the two differ.
inline bool canonical_less(Subset a, Subset b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    int lowest = std::countr_zero(diff);
    return a.contains(lowest);
}

} // namespace kklab
