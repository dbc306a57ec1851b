#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "apens/ensemble.hpp"

namespace apens {

// Stimulus and observation vectors are real-valued with components in [0,1].
using Vec = std::vector<double>;

/// Throws unless every component is in [0,1] and the vector is non-empty.
void validate_components(const Vec& v);

/// Count of positions i with |a_i - b_i| > tolerance. Symmetric.
std::size_t hamming_distance(const Vec& a, const Vec& b, double tolerance = 0.0);

struct TransformIdentity {};
struct TransformPermutation {
    std::vector<std::size_t> order;  // out[i] = x[order[i]]
};
struct TransformThreshold {
    double theta = 0.5;  // component -> 1 if >= theta else 0
};
using TransformSpec = std::variant<TransformIdentity, TransformPermutation, TransformThreshold>;

/// Applies the pluggable X => Y mapping; output components stay in [0,1].
Vec transform(const Vec& x, const TransformSpec& map);

// Immutable after store(); concurrent recalls against one memory are safe.
struct PatternMemory {
    double tolerance = 0.0;  // component-equality slack, 0 <= tolerance < 1
    std::vector<Vec> stored;
};

/// Returns a memory with the patterns appended in the given order. Rejects
/// mixed lengths, out-of-range components, and tolerance outside [0,1).
PatternMemory store(const PatternMemory& memory, const std::vector<Vec>& patterns);

struct RecallResult {
    std::size_t winner_index = 0;           // min(tie_indices)
    std::size_t distance = 0;               // <= n
    std::vector<std::size_t> tie_indices;   // all indices at the minimal distance
};

/// Exhaustive nearest-pattern search under the Hamming metric; ties broken to
/// the lowest stored index. Rejects empty memory and length mismatch.
RecallResult recall(const PatternMemory& memory, const Vec& probe);

/// Encodes an n-label member onto {0, 1/(n-1), ..., 1}: label -> its base
/// index, scaled. Injective and order-preserving; n = 1 maps to {0}.
Vec encode_pattern(const PermutationPattern& member, const BasePattern& base);

/// The encoding alphabet itself: value j = j/(n-1).
Vec encoding_alphabet(std::size_t n_labels);

}  // namespace apens
