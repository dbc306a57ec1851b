#pragma once

#include <cstdint>

namespace apens {

// splitmix64 (Steele/Lea/Vigna). Pinned so that seeded fixtures stay portable
// across implementations: state += 0x9E3779B97F4A7C15, output is the
// xor-shift-multiply mix below. Streams are cheap: any 64-bit value seeds one.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1): top 53 bits scaled.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound >= 1, by modulo reduction (pinned; the bias
    // at bound <= 8 is below 2^-60).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/// Stream for one trial: the split rule is seed XOR trial index.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
    return SplitMix64(seed ^ trial_index);
}

}  // namespace apens
