#pragma once

#include <cstdint>
#include <vector>

#include "apens/exact.hpp"
#include "apens/hamming_memory.hpp"
#include "apens/rng.hpp"

namespace apens {

enum class MemoryVariant {
    full,        // all n! ensemble members
    fixed_only,  // the chi members with at least one fixed position
    reduced,     // first `keep` fixed-position members in lexicographic order
};

struct ExperimentConfig {
    unsigned n = 3;             // base-pattern size, 2..8
    std::uint64_t trials = 1;   // >= 1
    double noise_rate = 0.0;    // per-position distortion probability, [0,1]
    std::uint64_t seed = 0;
    MemoryVariant variant = MemoryVariant::full;
    std::size_t keep = 0;       // reduced only: 1 <= keep <= chi(n)
};

struct ExperimentResult {
    ExperimentConfig config;
    double accuracy = 0.0;    // correct trials / trials
    ExactCount comparisons;   // stored-pattern distance evaluations performed
};

/// Each position independently, with probability noise_rate, is replaced by a
/// uniformly random different value from the encoding alphabet. One Bernoulli
/// draw per position in index order; the replacement draw is consumed only
/// when the position distorts. Deterministic given the stream state.
Vec distort(const Vec& pattern, double noise_rate, SplitMix64& rng, std::size_t alphabet_size);

/// Builds the n-ensemble, fills the memory per variant, then per trial picks
/// a source pattern uniformly, distorts it under the trial stream
/// (seed XOR trial index), recalls, and scores exact winner-index match.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// One full-variant run per rate, ascending grid required. Per-rate seeds are
/// consecutive outputs of SplitMix64(seed): rate g gets the (g+1)-th output.
std::vector<ExperimentResult> degradation_sweep(unsigned n, std::uint64_t trials,
                                                std::uint64_t seed,
                                                const std::vector<double>& noise_grid);

}  // namespace apens
