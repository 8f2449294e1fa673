#pragma once

#include <cstdint>

namespace kklab {

struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

namespace detail {
// SplitMix64 finalizer (Steele/Lea/Flood).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

// Counter-based generator keyed by (master, stream). Output i depends only
// on the key and the counter, so streams can be evaluated in any order and
// identical seeds always give identical sequences.
class CounterRng {
public:
    explicit CounterRng(Seed s)
        : key_(detail::mix64(detail::mix64(s.master) ^ s.stream)) {}

    std::uint64_t next_u64() {
        return detail::mix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_);
    }

    // Uniform in [0,1) with 53 bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace kklab
