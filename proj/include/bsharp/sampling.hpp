#ifndef BSHARP_SAMPLING_HPP
#define BSHARP_SAMPLING_HPP

#include <cstdint>

// Seeded generator for the sampling operations. splitmix64 rather than
// <random> engines + distributions so that identical seeds give identical
// streams on every platform and standard library.

namespace bsharp {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double next_in(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Derive an independent stream, e.g. one per sampled object.
    SplitMix64 split(std::uint64_t salt) {
        return SplitMix64(next() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }
};

}  // namespace bsharp

#endif
